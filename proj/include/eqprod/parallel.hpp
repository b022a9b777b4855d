#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eqprod {

/// Worker budget handed to library routines by the caller (the CLI owns it).
struct Parallelism {
    unsigned workers = 1;
};

/// Evaluates fn(i) for i in [0, count) on up to `par.workers` threads and
/// returns the results in index order, so output never depends on the
/// number of workers. The first exception thrown by any task is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Parallelism par, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> results(count);
    const std::size_t workers = std::min<std::size_t>(std::max(1u, par.workers), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        results[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace eqprod
