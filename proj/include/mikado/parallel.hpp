#pragma once

// OpenMP kernels shared by the field operations.
//
// Sums are accumulated over fixed-size blocks whose partial results are
// combined serially in block order, so a reduction returns the same bits for
// any thread count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace mikado::parallel {

inline constexpr std::size_t kReductionBlock = 4096;

/// Calls `f(i)` for i in [0, n) across the OpenMP team.
template <class F>
void for_each_index(std::size_t n, F&& f) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        f(static_cast<std::size_t>(i));
    }
}

/// Deterministic sum of `term(i)` for i in [0, n).
template <class F>
double sum(std::size_t n, F&& term) {
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

/// Maximum of `term(i)` over [0, n); returns 0 for n == 0.
template <class F>
double max(std::size_t n, F&& term) {
    double best = 0.0;
    bool first = true;
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        double acc = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) acc = std::max(acc, term(i));
        partial[static_cast<std::size_t>(b)] = acc;
    }
    for (double v : partial) {
        best = first ? v : std::max(best, v);
        first = false;
    }
    return best;
}

}  // namespace mikado::parallel
