#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace onsager {

/// Worker cap: ONSAGER_THREADS if set (must be a positive integer), else the
/// hardware concurrency.
int thread_cap();

/// Runs f(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled by exactly one worker, so results written to slot i do not depend
/// on the thread count. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
    const std::size_t workers =
        std::min<std::size_t>(count, threads < 1 ? 1 : static_cast<std::size_t>(threads));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace onsager
