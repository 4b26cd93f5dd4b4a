#ifndef SUBORD_DETAIL_PARALLEL_HPP
#define SUBORD_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace subord::detail {

/// Runs body(i) for i in [0, n) on a few worker threads. Each index is handled
/// exactly once, so results written to slot i are independent of scheduling.
/// If any body throws, the exception of the lowest failing index is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body, unsigned max_workers = 0)
{
    unsigned workers = max_workers != 0 ? max_workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, n);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += workers) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[w] = std::current_exception();
                        error_index[w] = i;
                        return;
                    }
                }
            });
        }
    }

    const auto first = std::min_element(error_index.begin(), error_index.end());
    if (*first < n)
        std::rethrow_exception(errors[static_cast<std::size_t>(first - error_index.begin())]);
}

} // namespace subord::detail

#endif // SUBORD_DETAIL_PARALLEL_HPP
