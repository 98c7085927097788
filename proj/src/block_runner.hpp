// Internal: runs a sample range over a fixed block grid, optionally on
// several threads, and hands back per-block results in block order. The
// block grid never depends on the worker count, so reductions done in
// block order give bit-identical results for any parallelism.

#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace coopsec::detail {

inline constexpr std::uint64_t kBlockSize = 8192;

// fn(lo, hi) -> Block over [lo, hi); must not throw.
template <typename Block, typename Fn>
std::vector<Block> run_blocks(std::uint64_t n, unsigned threads, Fn&& fn) {
    const std::uint64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<Block> results(n_blocks);
    if (n_blocks == 0) return results;

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > n_blocks) workers = static_cast<unsigned>(n_blocks);

    auto run_range = [&](std::uint64_t block) {
        const std::uint64_t lo = block * kBlockSize;
        const std::uint64_t hi = std::min(n, lo + kBlockSize);
        results[block] = fn(lo, hi);
    };

    if (workers == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_range(b);
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
                if (b >= n_blocks) return;
                run_range(b);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace coopsec::detail
