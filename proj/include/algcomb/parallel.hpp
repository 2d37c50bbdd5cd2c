#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace algcomb {

/// `requested` if positive, else ALGCOMB_THREADS if set and positive, else
/// the hardware concurrency (at least 1).
int thread_count(int requested = 0);

/// Calls f(i) for i in [0, count) using contiguous blocks per thread. Results
/// written to index-addressed storage are therefore independent of the
/// thread count. The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(count, (w + 1) * block);
                for (std::size_t i = w * block; i < end; ++i) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace algcomb
