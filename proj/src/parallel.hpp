// Internal helper: run fn(i) for i in [0, n), optionally across threads.
// Each index is processed exactly once; callers write to disjoint slots, so
// results do not depend on the thread count.

#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace catwig::detail {

template <class Fn>
void parallel_for(int n, unsigned threads, Fn&& fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, n > 0 ? static_cast<unsigned>(n) : 1u);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < n; i += static_cast<int>(threads)) {
                fn(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
}

}  // namespace catwig::detail
