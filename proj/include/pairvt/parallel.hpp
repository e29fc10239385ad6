#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace pairvt {

/// Splits [0, total) into a fixed number of shards that does not depend on
/// the worker count, runs `work(begin, end)` for each shard on up to
/// `workers` threads, and returns the per-shard results in shard order.
/// Callers merge the returned vector left to right, so any associative merge
/// yields output independent of `workers`.
template <typename Result, typename Work>
std::vector<Result> run_sharded(std::uint64_t total, unsigned workers, Work work, std::uint64_t shards = 64) {
    shards = std::max<std::uint64_t>(1, std::min<std::uint64_t>(shards, std::max<std::uint64_t>(total, 1)));
    std::vector<Result> results(shards);
    auto bounds = [&](std::uint64_t k) { return total * k / shards; };
    workers = std::max(1u, workers);
    if (workers == 1) {
        for (std::uint64_t k = 0; k < shards; ++k) results[k] = work(bounds(k), bounds(k + 1));
        return results;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t k = w; k < shards; k += workers) results[k] = work(bounds(k), bounds(k + 1));
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace pairvt
