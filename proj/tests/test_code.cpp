#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "pairvt/code.hpp"
#include "pairvt/verify.hpp"

using pairvt::BitWord;
using pairvt::CodeParams;

namespace {

using Key = std::vector<std::int64_t>;

std::map<Key, std::vector<std::string>> naive_buckets(std::size_t n) {
    std::map<Key, std::vector<std::string>> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const std::string s = oracle::bits(v, n);
        out[oracle::syndrome(s)].push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("code parameters") {
    const auto p = CodeParams::make(7, 3, 26, 226, 2);
    CHECK(p.n() == 7);
    CHECK(p.to_string() == "3,26,226,2");
    CHECK(CodeParams::parse(7, "3,26,226,2") == p);
    CHECK(CodeParams::of_word(BitWord::from_string("0000001")) == p);
    CHECK(CodeParams::make(7, 31, 0, 0, 0).residues().s0 == 3);
    CHECK_THROWS_AS(CodeParams::make(6, 0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams::parse(7, "1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(pairvt::SyndromeTuple{7, 28, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("membership examples") {
    const auto zero = CodeParams::make(7, 0, 0, 0, 0);
    CHECK(pairvt::is_codeword(BitWord::from_string("0000000"), zero));
    CHECK(pairvt::is_codeword(BitWord::from_string("0000001"), CodeParams::make(7, 3, 26, 226, 2)));
    CHECK_FALSE(pairvt::is_codeword(BitWord::from_string("0000001"), zero));
    CHECK_THROWS_AS(pairvt::is_codeword(BitWord::from_string("00000001"), zero), std::invalid_argument);
}

TEST_CASE("enumeration is ordered, complete and capped") {
    const auto zero = CodeParams::make(7, 0, 0, 0, 0);
    const auto words = pairvt::enumerate_codewords(zero);
    REQUIRE_FALSE(words.empty());
    CHECK(words.front().to_string() == "0000000");
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);

    CHECK_THROWS_AS(pairvt::enumerate_codewords(CodeParams::make(30, 0, 0, 0, 0)), pairvt::ResourceLimitError);
    CHECK_THROWS_AS(pairvt::enumerate_codewords(zero, 6), pairvt::ResourceLimitError);
}

TEST_CASE("census agrees with a naive bucketing and partitions the space") {
    for (std::uint32_t n : {7u, 9u, 11u}) {
        const auto naive = naive_buckets(n);
        const auto census = pairvt::bucket_census(n);
        CHECK(census.total == (std::uint64_t{1} << n));
        REQUIRE(census.buckets.size() == naive.size());
        std::uint64_t sum = 0, max_count = 0;
        auto it = naive.begin();
        for (const auto& b : census.buckets) {
            const Key key{static_cast<std::int64_t>(b.residues.s0), static_cast<std::int64_t>(b.residues.s1),
                          static_cast<std::int64_t>(b.residues.s2), static_cast<std::int64_t>(b.residues.s3)};
            CHECK(key == it->first);
            CHECK(b.count == it->second.size());
            sum += b.count;
            max_count = std::max(max_count, b.count);
            ++it;
        }
        CHECK(sum == census.total);
        CHECK(census.best_bucket().count == max_count);
        for (std::size_t i = 0; i < census.best; ++i) CHECK(census.buckets[i].count < max_count);
        CHECK(census.best_bucket().count >= pairvt::pigeonhole_floor(n));

        for (std::size_t i = 0; i < census.buckets.size(); i += census.buckets.size() / 16 + 1) {
            const auto& b = census.buckets[i];
            CHECK(pairvt::enumerate_codewords(CodeParams(b.residues)).size() == b.count);
        }
        CHECK(pairvt::enumerate_codewords(CodeParams(census.best_bucket().residues)).size() == max_count);
    }
}

TEST_CASE("census is independent of the worker count") {
    const auto one = pairvt::bucket_census(12, pairvt::kDefaultEnumerationCap, 1);
    for (unsigned workers : {2u, 3u, 8u}) {
        const auto many = pairvt::bucket_census(12, pairvt::kDefaultEnumerationCap, workers);
        CHECK(many.buckets == one.buckets);
        CHECK(many.best == one.best);
    }
    const auto top = one.top(5);
    REQUIRE(top.size() == 5);
    CHECK(top.front() == one.best_bucket());
    for (std::size_t i = 1; i < top.size(); ++i) {
        CHECK((top[i - 1].count > top[i].count ||
               (top[i - 1].count == top[i].count && top[i - 1].residues < top[i].residues)));
    }
}

TEST_CASE("pigeonhole floor and redundancy") {
    CHECK(pairvt::pigeonhole_floor(7) == 1);
    CHECK(pairvt::pigeonhole_floor(12) == 1);
    CHECK(pairvt::redundancy(std::uint64_t{1} << 10, 10) == doctest::Approx(0.0));
    CHECK(pairvt::redundancy(1, 10) == doctest::Approx(10.0));
    CHECK(pairvt::redundancy(2, 12) == doctest::Approx(11.0));
    CHECK_THROWS_AS(pairvt::redundancy(0, 10), std::domain_error);
    CHECK(pairvt::redundancy_bound(16) == doctest::Approx(32.0));
    const auto census = pairvt::bucket_census(12);
    const double red = pairvt::redundancy(CodeParams(census.best_bucket().residues));
    CHECK(red == doctest::Approx(12.0 - std::log2(static_cast<double>(census.best_bucket().count))));
    CHECK(red <= pairvt::redundancy_bound(12));
}

TEST_CASE("rank and unrank are inverse") {
    const auto census = pairvt::bucket_census(16);
    const CodeParams p(census.best_bucket().residues);
    const pairvt::Codebook book(p);
    REQUIRE(book.size() > 1);
    REQUIRE(book.size() == census.best_bucket().count);
    CHECK(book.encode(0) == pairvt::enumerate_codewords(p).front());
    for (std::uint64_t m = 0; m < book.size(); ++m) {
        CHECK(book.rank(book.encode(m)) == m);
        CHECK(pairvt::decode_index(pairvt::encode_index(m, p), p) == m);
    }
    CHECK_THROWS_AS(book.encode(book.size()), std::out_of_range);
    BitWord outsider;
    for (std::uint64_t v = 0; v < 1024; ++v) {
        outsider = BitWord::from_integer(v, 16);
        if (!pairvt::is_codeword(outsider, p)) break;
    }
    CHECK_THROWS_AS(book.rank(outsider), std::invalid_argument);
}

TEST_CASE("bucket verification agrees with a Levenshtein oracle at n = 7, 8") {
    for (std::uint32_t n : {7u, 8u}) {
        std::uint64_t pairs = 0, close = 0;
        for (const auto& [key, words] : naive_buckets(n)) {
            for (std::size_t a = 0; a < words.size(); ++a) {
                for (std::size_t b = a + 1; b < words.size(); ++b) {
                    ++pairs;
                    close += oracle::levenshtein(words[a], words[b]) <= 4;
                }
            }
        }
        const auto res = pairvt::verify_bucket_distances(n);
        CHECK(res.pairs_checked == pairs);
        CHECK(res.violations == close);
        CHECK(res.ok());
        CHECK(res.violations == 0);
    }
}

TEST_CASE("moment sweep: worker count does not change the result, and no collisions at n = 7") {
    const auto one = pairvt::sweep_moment_conditions(7, 1);
    const auto four = pairvt::sweep_moment_conditions(7, 4);
    CHECK(one.pairs_examined == 128 * 127 / 2);
    CHECK(one.close_pairs == four.close_pairs);
    CHECK(one.violations == four.violations);
    CHECK(one.ok());

    std::uint64_t close = 0;
    for (std::uint64_t a = 0; a < 128; ++a) {
        for (std::uint64_t b = a + 1; b < 128; ++b) close += oracle::levenshtein(oracle::bits(a, 7), oracle::bits(b, 7)) <= 4;
    }
    CHECK(one.close_pairs == close);

    const auto ham = pairvt::sweep_moment_conditions(7, 1, pairvt::SweepScope::HammingWithin4);
    CHECK(ham.ok());
    CHECK(ham.close_pairs <= one.close_pairs);
}
