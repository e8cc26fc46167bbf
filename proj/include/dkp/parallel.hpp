#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dkp {

// Kernel parallelism is bounded by DKP_THREADS (default 1). Work is split into
// index ranges with disjoint output regions, so results are identical at any
// thread count.
inline int thread_budget() {
    static int budget = [] {
        const char* env = std::getenv("DKP_THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        if (v < 1) v = 1;
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw > 0 && v > hw) v = hw;
        return v;
    }();
    return budget;
}

template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    int threads = std::min(thread_budget(), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([=] {
            for (int i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dkp
