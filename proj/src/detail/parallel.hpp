#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cutsparse::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned int hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over contiguous chunks of [0, n), possibly from
// multiple threads. fn must not touch shared mutable state without its own
// synchronization; callers keep determinism by merging per-chunk results in
// index order.
inline void parallel_chunks(std::size_t n, int jobs,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    if (jobs <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace cutsparse::detail
