// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rfprop {

// Execution policy for the data-parallel kernels. Every kernel that accepts
// an Exec produces bitwise identical results either way; the serial path is
// the reference the parallel one is tested against.
enum class Exec { serial, parallel };

namespace detail {

// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
// iterations are independent. Exceptions are captured per index and the one
// with the lowest index is rethrown, which keeps failure reporting identical
// between serial and parallel runs.
template <typename Fn>
void for_each_index(std::int64_t n, Exec exec, Fn&& fn) {
    if (n <= 0) return;
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::vector<std::pair<std::int64_t, std::exception_ptr>> failures;
#pragma omp parallel
        {
            std::pair<std::int64_t, std::exception_ptr> local{-1, nullptr};
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < n; ++i) {
                if (local.second) continue;
                try {
                    fn(i);
                } catch (...) {
                    local = {i, std::current_exception()};
                }
            }
            if (local.second) {
#pragma omp critical
                failures.push_back(local);
            }
        }
        if (!failures.empty()) {
            auto first = failures.front();
            for (const auto& f : failures)
                if (f.first < first.first) first = f;
            std::rethrow_exception(first.second);
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

} // namespace detail
} // namespace rfprop
