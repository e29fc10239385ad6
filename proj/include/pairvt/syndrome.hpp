#pragma once

// VT weight vectors, the four-residue syndrome of a padded word's adjacency
// profile, and the sign-preserving number of an integer sequence.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "pairvt/bitword.hpp"

namespace pairvt {

/// Smallest code length the construction supports.
inline constexpr std::uint32_t kMinCodeLength = 7;
/// Largest code length for which the order-2 accumulation is guaranteed to fit in 64 bits.
inline constexpr std::uint32_t kMaxSyndromeLength = 1u << 15;

struct Moduli {
    std::uint64_t m0, m1, m2, m3;  // 4n, 2n^2, 2n^3, 9
};
Moduli syndrome_moduli(std::uint32_t n);

/// Residues (F(X).VT0 mod 4n, F(X).VT1 mod 2n^2, F(X).VT2 mod 2n^3, f(X) mod 9)
/// for a length-n word x with padding X.
struct SyndromeTuple {
    std::uint32_t n = 0;
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;

    /// Reduces arbitrary integers into canonical residues. Throws for n < 7.
    static SyndromeTuple canonical(std::uint32_t n, std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                   std::int64_t k4);
    /// True when every residue lies in [0, modulus).
    bool is_canonical() const;

    friend bool operator==(const SyndromeTuple&, const SyndromeTuple&) = default;
    friend auto operator<=>(const SyndromeTuple&, const SyndromeTuple&) = default;

    /// "n=7 s0=3 s1=26 s2=226 s3=2"
    std::string to_key_value() const;
    static SyndromeTuple from_key_value(const std::string& line);
};

struct SyndromeTupleHash {
    std::size_t operator()(const SyndromeTuple& t) const noexcept;
};

/// Exact (unreduced) quantities behind the syndrome: F(X).VT_i^{n+2} for
/// i = 0, 1, 2 and f(X).
struct ProfileMoments {
    std::int64_t d0 = 0, d1 = 0, d2 = 0, f = 0;
    friend bool operator==(const ProfileMoments&, const ProfileMoments&) = default;
    friend auto operator<=>(const ProfileMoments&, const ProfileMoments&) = default;
};

/// (1^order, 2^order, ..., n^order); order must be 0, 1 or 2.
Profile vt_weight_vector(int order, std::size_t n);

/// z . VT_order^{|z|}, computed exactly.
std::int64_t vt_moment(const Profile& z, int order);

/// One-pass moments of F(pad(x)). No length restriction beyond kMaxSyndromeLength.
ProfileMoments profile_moments(const BitWord& x);

/// Throws std::invalid_argument when |x| < 7.
SyndromeTuple syndrome_tuple(const BitWord& x);
SyndromeTuple reduce_moments(const ProfileMoments& m, std::uint32_t n);

/// Minimum number of contiguous segments, each entirely non-negative or
/// entirely non-positive. Rejects the empty sequence.
std::size_t sign_preserving_number(const Profile& z);

/// Evaluates the zero-syndrome implication for z: if z.VT_i = 0 for every
/// 0 <= i < sigma(z), then z is the zero vector. Returns false only on a
/// counterexample.
bool zero_syndrome_forces_zero(const Profile& z);

}  // namespace pairvt
