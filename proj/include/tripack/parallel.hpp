#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace tripack {

/// Worker count for sweep parallelism: the TRIPACK_THREADS environment
/// variable when set, otherwise the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("TRIPACK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [0, count) on a static partition of a worker pool.
/// Callers collect per-index results into preallocated storage, so output
/// order never depends on scheduling.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
    const unsigned workers = std::min<size_t>(worker_count(), count ? count : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, count]() {
            for (size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace tripack
