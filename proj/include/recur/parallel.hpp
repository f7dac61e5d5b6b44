#ifndef RECUR_PARALLEL_HPP
#define RECUR_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace recur {

// thread cap from RECUR_THREADS (0 or unset = hardware concurrency)
inline int thread_count() {
    if (const char* env = std::getenv("RECUR_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
// are identical at any thread count.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
    int nt = thread_count();
    if (nt <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    if (static_cast<long>(nt) > n) nt = static_cast<int>(n);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errs(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        workers.emplace_back([&, t]() {
            try {
                for (long i = t; i < n; i += nt) fn(i);
            } catch (...) {
                errs[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace recur

#endif
