#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace vidreq {

// Runs f(0) .. f(n-1) on at most `jobs` threads. If calls throw, the
// exception of the lowest failing index is rethrown after all workers stop,
// so the reported error does not depend on scheduling.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
    if (n == 0) return;
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t i; !failed.load() && (i = next.fetch_add(1)) < n;) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace vidreq
