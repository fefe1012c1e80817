#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mike::util {

// Order-preserving bounded parallel map: results land at the index of their
// input regardless of completion order. The first exception wins and is
// rethrown on the caller thread after all workers drain.
template <typename Out>
std::vector<Out> parallel_map(std::size_t n, std::size_t max_workers,
                              const std::function<Out(std::size_t)>& fn) {
    std::vector<Out> results(n);
    if (n == 0) return results;
    std::size_t workers = std::min(std::max<std::size_t>(max_workers, 1), n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            {
                std::lock_guard<std::mutex> lock(err_mu);
                if (first_error) return;
            }
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace mike::util
