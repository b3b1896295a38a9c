#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace patern {

inline unsigned thread_count() {
    static unsigned n = [] {
        if (const char* env = std::getenv("PATERN_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : std::min(hw, 8u);
    }();
    return n;
}

// Runs fn(i) for i in [0, n). Each index is processed by exactly one thread
// with a fixed block partition, so results are bitwise independent of the
// thread count (no shared accumulators, no atomics).
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned threads = thread_count();
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace patern
