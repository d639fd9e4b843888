#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clairaut {

// Execution policy for the grid kernels. Every kernel writes results into a
// pre-sized vector by index, so both policies produce bit-identical output;
// `serial` is the reference implementation the tests compare against.
enum class Exec { serial, parallel };

// Run fn(i) for i in [0, n). Under Exec::parallel the iterations are spread
// across OpenMP threads (when compiled with OpenMP; otherwise this quietly
// degrades to the serial loop). Exceptions thrown by iterations are captured
// and the one with the lowest index is rethrown after the loop, so failure
// behavior is deterministic too.
template <typename Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error = nullptr;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    std::mutex guard;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            const std::lock_guard<std::mutex> lock(guard);
            if (static_cast<std::size_t>(i) < first_index) {
                first_index = static_cast<std::size_t>(i);
                first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace clairaut
