#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pairvt/syndrome.hpp"

using pairvt::BitWord;
using pairvt::Profile;

namespace {

Profile digits(std::uint64_t code, std::size_t len, int lo, int base) {
    Profile z(len);
    for (std::size_t i = 0; i < len; ++i) {
        z[i] = lo + static_cast<int>(code % base);
        code /= base;
    }
    return z;
}

std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("vt weight vectors") {
    CHECK(pairvt::vt_weight_vector(0, 4) == Profile{1, 1, 1, 1});
    CHECK(pairvt::vt_weight_vector(1, 4) == Profile{1, 2, 3, 4});
    CHECK(pairvt::vt_weight_vector(2, 4) == Profile{1, 4, 9, 16});
    CHECK_THROWS_AS(pairvt::vt_weight_vector(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(pairvt::vt_weight_vector(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(pairvt::vt_weight_vector(0, 0), std::invalid_argument);
}

TEST_CASE("syndrome tuple examples") {
    const auto zero = pairvt::syndrome_tuple(BitWord::from_string("0000000"));
    CHECK(zero == pairvt::SyndromeTuple{7, 0, 0, 0, 0});
    CHECK(pairvt::adjacency_profile(pairvt::pad(BitWord::from_string("0000001"))) == Profile{0, 0, 0, 0, 0, 0, 0, 1, 2});
    const auto t = pairvt::syndrome_tuple(BitWord::from_string("0000001"));
    CHECK(t == pairvt::SyndromeTuple{7, 3, 26, 226, 2});
    CHECK(t.to_key_value() == "n=7 s0=3 s1=26 s2=226 s3=2");
    CHECK(pairvt::SyndromeTuple::from_key_value(t.to_key_value()) == t);
    CHECK_THROWS_AS(pairvt::syndrome_tuple(BitWord::from_string("000000")), std::invalid_argument);
    CHECK_THROWS_AS(pairvt::SyndromeTuple::canonical(6, 0, 0, 0, 0), std::invalid_argument);
    const auto c = pairvt::SyndromeTuple::canonical(7, -1, 98, 687, 10);
    CHECK(c == pairvt::SyndromeTuple{7, 27, 0, 1, 1});
    CHECK(c.is_canonical());
    CHECK_FALSE((pairvt::SyndromeTuple{7, 28, 0, 0, 0}).is_canonical());
}

TEST_CASE("one-pass syndrome agrees with the naive dot products") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 7 + rng() % 120;
        const std::string s = oracle::random_bits(n, rng);
        const auto t = pairvt::syndrome_tuple(BitWord::from_string(s));
        const auto ref = oracle::syndrome(s);
        CHECK(t.n == n);
        CHECK(t.s0 == ref[0]);
        CHECK(t.s1 == ref[1]);
        CHECK(t.s2 == ref[2]);
        CHECK(t.s3 == ref[3]);
    }
    for (std::uint64_t v = 0; v < 512; ++v) {
        const std::string s = oracle::bits(v, 9);
        const auto t = pairvt::syndrome_tuple(BitWord::from_string(s));
        const auto ref = oracle::syndrome(s);
        CHECK((t.s0 == ref[0] && t.s1 == ref[1] && t.s2 == ref[2] && t.s3 == ref[3]));
    }
}

TEST_CASE("profile moments are the unreduced dot products") {
    const std::string s = "0110100111";
    const auto m = pairvt::profile_moments(BitWord::from_string(s));
    const Profile f = oracle::profile(oracle::zero_padded(s));
    CHECK(m.d0 == oracle::dot_power(f, 0));
    CHECK(m.d1 == oracle::dot_power(f, 1));
    CHECK(m.d2 == oracle::dot_power(f, 2));
    CHECK(m.f == f.back());
    CHECK(pairvt::reduce_moments(m, 10) == pairvt::syndrome_tuple(BitWord::from_string(s)));
    CHECK(pairvt::vt_moment(f, 2) == m.d2);
}

TEST_CASE("sign-preserving number examples") {
    CHECK(pairvt::sign_preserving_number({1, 0, 1, -1, -2, 3}) == 3);
    CHECK(pairvt::sign_preserving_number({0, 0, 0}) == 1);
    CHECK(pairvt::sign_preserving_number({1, -1, 1, -1}) == 4);
    CHECK(pairvt::sign_preserving_number({0, -1, 0, 1}) == 2);
    CHECK_THROWS_AS(pairvt::sign_preserving_number({}), std::invalid_argument);
}

TEST_CASE("greedy sigma matches both brute-force oracles on {-1,0,1}^8") {
    std::size_t mismatches = 0;
    for (std::uint64_t code = 0; code < power(3, 8); ++code) {
        const Profile z = digits(code, 8, -1, 3);
        const auto greedy = pairvt::sign_preserving_number(z);
        mismatches += greedy != oracle::sigma_by_cut_sets(z);
        mismatches += greedy != oracle::sigma_by_partition_dp(z);
    }
    CHECK(mismatches == 0);
}

TEST_CASE("sigma symmetries and subadditivity on {-1,0,1}^8") {
    for (std::uint64_t code = 0; code < power(3, 8); ++code) {
        const Profile z = digits(code, 8, -1, 3);
        const auto sz = pairvt::sign_preserving_number(z);
        Profile neg(z);
        for (auto& e : neg) e = -e;
        REQUIRE(sz == pairvt::sign_preserving_number(neg));
        REQUIRE(sz == pairvt::sign_preserving_number(pairvt::invert(z)));
        for (std::size_t i = 1; i < z.size(); ++i) {
            const Profile left(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(i));
            const Profile right(z.begin() + static_cast<std::ptrdiff_t>(i), z.end());
            REQUIRE(sz <= pairvt::sign_preserving_number(left) + pairvt::sign_preserving_number(right));
        }
    }
}

TEST_CASE("greedy sigma matches the partition oracle on random long vectors") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 2000; ++trial) {
        Profile z(32);
        for (auto& e : z) e = entry(rng);
        REQUIRE(pairvt::sign_preserving_number(z) == oracle::sigma_by_partition_dp(z));
    }
}

TEST_CASE("zero-syndrome lemma checker") {
    CHECK(pairvt::zero_syndrome_forces_zero({0, 0, 0, 0}));
    CHECK(pairvt::zero_syndrome_forces_zero({1, -1, 0}));
    CHECK(pairvt::vt_moment({1, -1, 0}, 0) == 0);
    CHECK(pairvt::vt_moment({1, -1, 0}, 1) == -1);
    std::size_t failures = 0;
    for (std::uint64_t code = 0; code < power(5, 6); ++code) {
        failures += !pairvt::zero_syndrome_forces_zero(digits(code, 6, -2, 5));
    }
    CHECK(failures == 0);
}

TEST_CASE("inversion reverses and negates profile differences of equal-count words") {
    for (std::size_t len = 1; len <= 8; ++len) {
        const std::uint64_t total = std::uint64_t{1} << len;
        for (std::uint64_t a = 0; a < total; ++a) {
            const auto x = BitWord::from_integer(a, len);
            const Profile fx = pairvt::adjacency_profile(x);
            const Profile fxi = pairvt::adjacency_profile(pairvt::invert(x));
            for (std::uint64_t b = 0; b < total; ++b) {
                const auto y = BitWord::from_integer(b, len);
                if (pairvt::adjacency_count(x) != pairvt::adjacency_count(y)) continue;
                const Profile d = pairvt::profile_difference(fx, pairvt::adjacency_profile(y));
                const Profile di = pairvt::profile_difference(fxi, pairvt::adjacency_profile(pairvt::invert(y)));
                Profile expected = pairvt::invert(d);
                for (auto& e : expected) e = -e;
                REQUIRE(di == expected);
                REQUIRE(pairvt::sign_preserving_number(di) == pairvt::sign_preserving_number(d));
            }
        }
    }
}
