#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pairvt/channel.hpp"

using pairvt::BitWord;
using pairvt::ErrorPattern;

namespace {

BitWord w(const char* s) { return BitWord::from_string(s); }

std::vector<std::string> strings(const std::vector<BitWord>& ws) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(x.to_string());
    return out;
}

bool sorted_intersect(const std::vector<BitWord>& a, const std::vector<BitWord>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

std::vector<BitWord> all_words(std::size_t len) {
    std::vector<BitWord> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BitWord::from_integer(v, len));
    return out;
}

}  // namespace

TEST_CASE("apply_errors examples") {
    ErrorPattern del;
    del.deletions = {1};
    CHECK(pairvt::apply_errors(w("101"), del).to_string() == "01");
    ErrorPattern trivial;
    trivial.substitutions = {{2, 0}};
    CHECK(pairvt::apply_errors(w("101"), trivial).to_string() == "101");
    ErrorPattern ins;
    ins.insertions = {{0, 1}};
    CHECK(pairvt::apply_errors(w("0"), ins).to_string() == "10");
}

TEST_CASE("apply_errors uses the original frame for every edit") {
    // x = 0 1 1 0 1; flip x_4, drop x_2, insert 0 before x_1 and 1 after x_5.
    const auto p = ErrorPattern::parse("sub@4=1,del@2,ins@0=0,ins@5=1");
    CHECK(pairvt::apply_errors(w("01101"), p).to_string() == "001111");
    ErrorPattern two_at_same_gap;
    two_at_same_gap.insertions = {{1, 1}, {1, 0}};
    CHECK(pairvt::apply_errors(w("00"), two_at_same_gap).to_string() == "0100");
}

TEST_CASE("error pattern validation and text form") {
    ErrorPattern p;
    p.deletions = {4};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.deletions = {2, 2};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.deletions = {2};
    p.substitutions = {{2, 1}};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.substitutions = {{3, 1}};
    CHECK_NOTHROW(p.validate(3));
    p.insertions = {{4, 0}};
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    CHECK_THROWS_AS(pairvt::apply_errors(w("010"), p), std::invalid_argument);

    const auto q = ErrorPattern::parse("sub@4=1,del@2,ins@0=1");
    CHECK(q.substitution_count() == 1);
    CHECK(q.deletion_count() == 1);
    CHECK(q.insertion_count() == 1);
    CHECK(ErrorPattern::parse(q.to_string()) == q);
    CHECK(ErrorPattern{}.to_string() == "none");
    CHECK(ErrorPattern::parse("none").total() == 0);
    CHECK_THROWS_AS(ErrorPattern::parse("swap@1"), std::invalid_argument);
    CHECK_THROWS_AS(ErrorPattern::parse("sub@1=2"), std::invalid_argument);
}

TEST_CASE("error ball examples") {
    CHECK(strings(pairvt::error_ball(w("101"), 0, 1, 0)) == std::vector<std::string>{"01", "10", "11"});
    CHECK(pairvt::error_ball(w("0"), 1, 0, 0).size() == 3);
    CHECK(strings(pairvt::error_ball(w("0110"), 0, 0, 0)) == std::vector<std::string>{"0110"});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = BitWord::from_string(oracle::random_bits(1 + rng() % 12, rng));
        const auto sub = pairvt::error_ball(x, 0, 0, 1);
        CHECK(std::binary_search(sub.begin(), sub.end(), x));
        CHECK(pairvt::error_ball(x, 1, 0, 0).size() == x.size() + 2);
    }
    CHECK_THROWS_AS(pairvt::error_ball(w("0101"), 2, 2, 1), std::invalid_argument);
}

TEST_CASE("error ball lengths follow t - s") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = BitWord::from_string(oracle::random_bits(3 + rng() % 8, rng));
        for (std::size_t t = 0; t <= 2; ++t) {
            for (std::size_t s = 0; s + t <= 2; ++s) {
                for (std::size_t r = 0; r + s + t <= 2; ++r) {
                    for (const auto& y : pairvt::error_ball(x, t, s, r)) REQUIRE(y.size() == x.size() + t - s);
                }
            }
        }
    }
}

TEST_CASE("radius-2 edit ball is exactly the Levenshtein ball") {
    for (std::size_t len = 1; len <= 6; ++len) {
        for (const auto& x : all_words(len)) {
            std::vector<std::string> expected;
            for (std::size_t m = (len >= 2 ? len - 2 : 0); m <= len + 2; ++m) {
                for (const auto& y : all_words(m)) {
                    if (oracle::levenshtein(x.to_string(), y.to_string()) <= 2) expected.push_back(y.to_string());
                }
            }
            const auto ball = strings(pairvt::edit_ball(x, 2));
            REQUIRE(ball == expected);
        }
    }
}

TEST_CASE("edit distance examples and oracle agreement") {
    CHECK(pairvt::edit_distance(w("101"), w("010")) == 2);
    CHECK(pairvt::edit_distance(w("00"), w("11")) == 2);
    CHECK(pairvt::edit_distance(w("0110"), w("0110")) == 0);
    CHECK(pairvt::edit_distance(BitWord{}, w("011")) == 3);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string a = oracle::random_bits(rng() % 15, rng);
        const std::string b = oracle::random_bits(rng() % 15, rng);
        const auto d = oracle::levenshtein(a, b);
        REQUIRE(pairvt::edit_distance(BitWord::from_string(a), BitWord::from_string(b)) == d);
        for (std::size_t limit = 0; limit <= 6; ++limit) {
            REQUIRE(pairvt::bounded_edit_distance(BitWord::from_string(a), BitWord::from_string(b), limit) ==
                    std::min(d, limit + 1));
        }
    }
}

TEST_CASE("edit distance is a metric") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const auto a = BitWord::from_string(oracle::random_bits(rng() % 13, rng));
        const auto b = BitWord::from_string(oracle::random_bits(rng() % 13, rng));
        const auto c = BitWord::from_string(oracle::random_bits(rng() % 13, rng));
        const auto ab = pairvt::edit_distance(a, b);
        REQUIRE(ab == pairvt::edit_distance(b, a));
        REQUIRE((ab == 0) == (a == b));
        REQUIRE(pairvt::edit_distance(a, c) <= ab + pairvt::edit_distance(b, c));
    }
}

TEST_CASE("confusability examples") {
    CHECK(pairvt::confusable_within(w("101"), w("010"), 1));
    CHECK(pairvt::balls_intersect(w("101"), w("010"), 1));
    CHECK(pairvt::confusable_within(w("0110"), w("0110"), 3));
    CHECK_FALSE(pairvt::confusable_within(w("0000000"), w("1111111"), 2));
    CHECK_FALSE(pairvt::balls_intersect(w("0000000"), w("1111111"), 2));
    CHECK_THROWS_AS(pairvt::confusable_within(w("0"), w("1"), 0), std::invalid_argument);
}

TEST_CASE("distance <= 4 iff the radius-2 balls meet, and insertion/deletion duality, lengths up to 9") {
    for (std::size_t len = 1; len <= 9; ++len) {
        const auto words = all_words(len);
        std::vector<std::vector<BitWord>> edit, ins, del;
        for (const auto& x : words) {
            edit.push_back(pairvt::edit_ball(x, 2));
            ins.push_back(pairvt::error_ball(x, 2, 0, 0));
            del.push_back(len >= 2 ? pairvt::error_ball(x, 0, 2, 0) : std::vector<BitWord>{});
        }
        std::size_t metric_mismatch = 0, duality_mismatch = 0;
        for (std::size_t a = 0; a < words.size(); ++a) {
            for (std::size_t b = a; b < words.size(); ++b) {
                const bool close = pairvt::bounded_edit_distance(words[a], words[b], 4) <= 4;
                metric_mismatch += close != sorted_intersect(edit[a], edit[b]);
                if (len >= 2) duality_mismatch += sorted_intersect(ins[a], ins[b]) != sorted_intersect(del[a], del[b]);
            }
        }
        CHECK_MESSAGE(metric_mismatch == 0, "length ", len);
        CHECK_MESSAGE(duality_mismatch == 0, "length ", len);
    }
}

TEST_CASE("pattern enumeration visits each exact pattern once") {
    std::set<std::string> seen;
    std::size_t visits = 0;
    pairvt::for_each_pattern(4, 1, 1, 0, [&](const ErrorPattern& p) {
        ++visits;
        seen.insert(p.to_string());
        CHECK(p.insertion_count() == 1);
        CHECK(p.deletion_count() == 1);
    });
    CHECK(visits == seen.size());
    CHECK(visits == 4 * 5 * 2);
}

TEST_CASE("random patterns are valid and reproducible") {
    std::mt19937_64 a(21), b(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 10;
        const std::size_t edits = trial % 5;
        const auto p = pairvt::random_pattern(n, edits, a);
        CHECK(p == pairvt::random_pattern(n, edits, b));
        CHECK(p.total() == edits);
        CHECK_NOTHROW(p.validate(n));
    }
}
