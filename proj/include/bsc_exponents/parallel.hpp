#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bsc {

/// Worker cap: BSC_EXPONENTS_THREADS if set (clamped to [1, 256]),
/// otherwise the hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, count).  Each index is computed exactly once and
/// writes only to its own output slot, so results are deterministic
/// regardless of scheduling.  The first exception, if any, is rethrown on
/// the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2 * static_cast<std::size_t>(workers)) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace bsc
