#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypspec {

// Worker count for node-parallel loops; HYPSPEC_THREADS overrides.
inline int thread_count() {
    if (const char* env = std::getenv("HYPSPEC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

// Parallel loop over [0, n).  Each index writes only its own slot, so the
// result is bit-identical for every worker count; reductions over the
// produced slots must be done sequentially by the caller.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, int threads = thread_count()) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace hypspec
