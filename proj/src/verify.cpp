#include "pairvt/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "pairvt/channel.hpp"
#include "pairvt/parallel.hpp"

namespace pairvt {

namespace {

constexpr std::size_t kConfusableDistance = 4;  // 2k for k = 2

struct Partial {
    std::uint64_t pairs = 0;
    std::uint64_t close = 0;
    std::uint64_t violations = 0;
    std::optional<PairWitness> witness;
};

void merge_into(Partial& acc, const Partial& part) {
    acc.pairs += part.pairs;
    acc.close += part.close;
    acc.violations += part.violations;
    if (!acc.witness && part.witness) acc.witness = part.witness;
}

}  // namespace

BucketVerification verify_bucket_distances(std::uint32_t n, unsigned workers, std::uint32_t cap) {
    if (n < kMinCodeLength) throw std::invalid_argument("code length must be at least 7");
    check_enumeration_cap(n, cap);
    const std::uint64_t total = std::uint64_t{1} << n;

    std::vector<SyndromeTuple> syn(total);
    for (std::uint64_t v = 0; v < total; ++v) syn[v] = syndrome_tuple(BitWord::from_integer(v, n));
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return syn[a] < syn[b]; });

    std::vector<std::pair<std::uint64_t, std::uint64_t>> groups;  // [begin, end) into order
    for (std::uint64_t i = 0; i < total;) {
        std::uint64_t j = i + 1;
        while (j < total && syn[order[j]] == syn[order[i]]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    auto parts = run_sharded<Partial>(groups.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Partial part;
        for (std::uint64_t g = lo; g < hi; ++g) {
            const auto [b, e] = groups[g];
            for (std::uint64_t i = b; i < e; ++i) {
                const BitWord x = BitWord::from_integer(order[i], n);
                for (std::uint64_t j = i + 1; j < e; ++j) {
                    const BitWord y = BitWord::from_integer(order[j], n);
                    ++part.pairs;
                    const std::size_t d = bounded_edit_distance(x, y, kConfusableDistance);
                    if (d <= kConfusableDistance) {
                        ++part.violations;
                        if (!part.witness) part.witness = PairWitness{x, y, d, syn[order[i]]};
                    }
                }
            }
        }
        return part;
    });

    Partial acc;
    for (const auto& p : parts) merge_into(acc, p);
    BucketVerification out;
    out.n = n;
    out.buckets = groups.size();
    out.pairs_checked = acc.pairs;
    out.violations = acc.violations;
    out.first_violation = acc.witness;
    return out;
}

MomentSweep sweep_moment_conditions(std::uint32_t n, unsigned workers, SweepScope scope, std::uint32_t cap) {
    if (n < kMinCodeLength) throw std::invalid_argument("code length must be at least 7");
    check_enumeration_cap(n, cap);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<ProfileMoments> moments(total);
    for (std::uint64_t v = 0; v < total; ++v) moments[v] = profile_moments(BitWord::from_integer(v, n));

    auto parts = run_sharded<Partial>(total, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Partial part;
        for (std::uint64_t a = lo; a < hi; ++a) {
            const BitWord x = BitWord::from_integer(a, n);
            for (std::uint64_t b = a + 1; b < total; ++b) {
                if (scope == SweepScope::HammingWithin4 && std::popcount(a ^ b) > 4) continue;
                ++part.pairs;
                const BitWord y = BitWord::from_integer(b, n);
                const std::size_t d = bounded_edit_distance(x, y, kConfusableDistance);
                if (d > kConfusableDistance) continue;
                ++part.close;
                if (moments[a] == moments[b]) {
                    ++part.violations;
                    if (!part.witness) part.witness = PairWitness{x, y, d, syndrome_tuple(x)};
                }
            }
        }
        return part;
    });

    Partial acc;
    for (const auto& p : parts) merge_into(acc, p);
    MomentSweep out;
    out.n = n;
    out.pairs_examined = acc.pairs;
    out.close_pairs = acc.close;
    out.violations = acc.violations;
    out.first_violation = acc.witness;
    return out;
}

}  // namespace pairvt
