#pragma once

// Exhaustive checks of the correcting property over all words of a length.

#include <cstdint>
#include <optional>

#include "pairvt/bitword.hpp"
#include "pairvt/code.hpp"
#include "pairvt/syndrome.hpp"

namespace pairvt {

struct PairWitness {
    BitWord x, y;
    std::size_t distance = 0;
    SyndromeTuple residues;  // syndrome shared by x and y (bucket sweeps)
};

/// Every nonempty syndrome class must have pairwise edit distance >= 5.
struct BucketVerification {
    std::uint32_t n = 0;
    std::uint64_t buckets = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::optional<PairWitness> first_violation;  // lexicographically first bucket, then pair
    bool ok() const { return violations == 0; }
};

BucketVerification verify_bucket_distances(std::uint32_t n, unsigned workers = 1,
                                           std::uint32_t cap = kDefaultEnumerationCap);

/// Sweep over all unordered pairs x != y with L*(x, y) <= 4 looking for one
/// whose padded profiles have identical order-0..2 VT moments and f(X) = f(Y).
struct MomentSweep {
    std::uint32_t n = 0;
    std::uint64_t pairs_examined = 0;  // all unordered pairs x < y (or the restricted subset)
    std::uint64_t close_pairs = 0;     // those with L* <= 4
    std::uint64_t violations = 0;
    std::optional<PairWitness> first_violation;
    bool ok() const { return violations == 0; }
};

enum class SweepScope {
    AllPairs,
    /// Only equal-length pairs differing in at most 4 positions.
    HammingWithin4,
};

MomentSweep sweep_moment_conditions(std::uint32_t n, unsigned workers = 1, SweepScope scope = SweepScope::AllPairs,
                                    std::uint32_t cap = kDefaultEnumerationCap);

}  // namespace pairvt
