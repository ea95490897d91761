/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_PARALLEL_HH
#define RAMSEY_GUARD_PARALLEL_HH 1

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ramsey
{
    /**
     * Runs task(i) for every i in [0, count) on up to `jobs` threads and
     * returns the results indexed by i. Callers reduce the vector in index
     * order, so the outcome never depends on scheduling or on `jobs`. The first
     * exception thrown by a task is rethrown here.
     */
    template <typename Task_>
    auto run_indexed(std::size_t count, unsigned jobs, Task_ task) -> std::vector<decltype(task(std::size_t{ 0 }))>
    {
        using Result = decltype(task(std::size_t{ 0 }));
        std::vector<std::optional<Result> > slots(count);

        auto unwrap = [&] () {
            std::vector<Result> results;
            results.reserve(count);
            for (auto & s : slots)
                results.push_back(std::move(*s));
            return results;
        };

        unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
        if (threads <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                slots[i].emplace(task(i));
            return unwrap();
        }

        std::atomic<std::size_t> next{ 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&] () {
            for (std::size_t i ; (i = next.fetch_add(1)) < count ; ) {
                try {
                    slots[i].emplace(task(i));
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        std::vector<std::thread> pool;
        for (unsigned t = 0 ; t < threads ; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();

        if (failure)
            std::rethrow_exception(failure);
        return unwrap();
    }
}

#endif
