#ifndef POWERCOLOR_PARALLEL_HPP
#define POWERCOLOR_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace powercolor {

/// Runs fn(i) for i in [0, n) split over `threads` workers in contiguous
/// blocks. Callers write only to their own slot i, so results never depend
/// on scheduling.
template <typename Fn>
void parallel_over(int n, int threads, Fn fn) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int begin = t * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&fn, begin, end] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace powercolor

#endif
