#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace respeval::detail {

// Runs fn(i) for i in [0, n) on at most `bound` threads. fn must not throw.
template <typename Fn>
void bounded_for_each(std::size_t n, std::size_t bound, Fn&& fn) {
    const std::size_t workers = std::min(n, std::max<std::size_t>(bound, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
}

}  // namespace respeval::detail
