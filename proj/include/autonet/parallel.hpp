#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace autonet {

/// Chunked parallel map-reduce over [begin, end). Chunk results are merged
/// in chunk order, so the outcome is independent of the worker count.
template <typename R, typename PerChunk, typename Merge>
R parallel_map_reduce(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, int threads, R init,
                      PerChunk&& per_chunk, Merge&& merge) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (chunk == 0) chunk = 1;

    const std::uint64_t total = end > begin ? end - begin : 0;
    const std::uint64_t n_chunks = (total + chunk - 1) / chunk;
    if (n_chunks <= 1 || threads == 1) {
        if (total > 0) init = merge(std::move(init), per_chunk(begin, end));
        return init;
    }

    std::vector<R> slots(n_chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= n_chunks) break;
            const std::uint64_t lo = begin + k * chunk;
            const std::uint64_t hi = std::min(end, lo + chunk);
            slots[k] = per_chunk(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (auto& slot : slots) init = merge(std::move(init), std::move(slot));
    return init;
}

}  // namespace autonet
