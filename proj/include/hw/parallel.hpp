#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace hw {

/// Process-wide worker-pool width. 1 disables threading. Results of every
/// parallel loop in this project are written by index, so output is identical
/// at any width.
void set_parallel_width(unsigned width);
unsigned parallel_width();

/// Runs fn(i) for i in [0, count). Static block partition over the configured
/// width; fn must only write to index-i slots.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned width = parallel_width();
    if (width <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(width, count));
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) fn(i);
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace hw
