#ifndef FREEPROB_SRC_PARALLEL_HPP
#define FREEPROB_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace freeprob::detail
{

// Runs body(i) for i in [begin, end), striding indices over `jobs` threads.
// Each index writes only its own output slot, so results do not depend on
// the schedule. The first exception thrown by a worker is rethrown.
template <class Body>
void parallel_range(std::size_t begin, std::size_t end, unsigned jobs, Body&& body)
{
    const std::size_t count = end > begin ? end - begin : 0;
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) {
            body(i);
        }
        return;
    }
    const std::size_t workers = std::min<std::size_t>(jobs, count);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] {
                try {
                    for (std::size_t i = begin + t; i < end; i += workers) {
                        body(i);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace freeprob::detail

#endif
