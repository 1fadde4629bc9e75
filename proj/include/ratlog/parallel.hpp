#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ratlog {

/// Static-partition parallel loop over [0, n); rethrows the first exception.
inline void parallel_for(long n, const std::function<void(long)>& fn, int jobs = 0) {
    if (jobs <= 0) jobs = int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (n <= 0) return;
    if (jobs == 1 || n == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::mutex mu;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    const int workers = int(std::min<long>(jobs, n));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long i = w; i < n; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ratlog
