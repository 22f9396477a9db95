#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace agrodevs::detail {

/// Runs fn(i) for i in [0, n) on up to `width` threads in contiguous
/// chunks. width <= 1 runs inline. fn must only write state owned by i.
/// The first exception thrown by any worker is rethrown after all join.
template <class Fn>
void parallel_for(std::size_t n, std::size_t width, Fn&& fn) {
    width = std::min(width, n);
    if (width <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t chunk = (n + width - 1) / width;
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(width);
        for (std::size_t w = 0; w < width; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([lo, hi, &fn, &error, &error_mutex] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace agrodevs::detail
