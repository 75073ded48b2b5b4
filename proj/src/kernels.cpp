#include "vacuakit/kernels.hpp"

#include "vacuakit/errors.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace vacuakit::kernels {

int thread_cap() {
#if defined(_OPENMP)
    int cap = omp_get_max_threads();
    if (const char* env = std::getenv("VACUAKIT_THREADS")) {
        try {
            cap = std::stoi(env);
        } catch (const std::exception&) {
            // Malformed values fall back to the OpenMP default.
        }
    }
    return cap < 1 ? 1 : cap;
#else
    return 1;
#endif
}

double block_sum_serial(std::span<const double> xs) {
    double acc = 0.0;
    for (double x : xs) {
        acc += x;
    }
    return acc;
}

namespace {

// Sum of the fixed-size blocks of xs, accumulated per block and combined in
// block order. The split does not depend on the thread count, so the result
// matches block_sum_serial bitwise only up to the grouping; determinism across
// thread counts is what matters here.
double blocked_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    const std::size_t nblocks = (n + reduction_block - 1) / reduction_block;
    if (nblocks <= 1) {
        return block_sum_serial(xs);
    }
    std::vector<double> partial(nblocks, 0.0);
    const auto count = static_cast<std::ptrdiff_t>(nblocks);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
    for (std::ptrdiff_t b = 0; b < count; ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t end = begin + reduction_block < n ? begin + reduction_block : n;
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            acc += xs[i];
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

} // namespace

double block_sum(std::span<const double> xs) {
    return blocked_sum(xs);
}

double trapezoid_uniform_serial(std::span<const double> ys, double h) {
    if (ys.size() < 2) {
        return 0.0;
    }
    double interior = 0.0;
    for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
        interior += ys[i];
    }
    return h * (0.5 * (ys.front() + ys.back()) + interior);
}

double trapezoid_uniform(std::span<const double> ys, double h) {
    if (ys.size() < 2) {
        return 0.0;
    }
    const double interior = blocked_sum(ys.subspan(1, ys.size() - 2));
    return h * (0.5 * (ys.front() + ys.back()) + interior);
}

namespace {

// Interval-wise trapezoid contributions for a non-uniform grid.
double trapezoid_intervals(std::span<const double> xs, std::span<const double> ys,
                           bool blocked) {
    if (xs.size() != ys.size()) {
        throw GridMismatch("trapezoid: grids differ in length");
    }
    if (xs.size() < 2) {
        return 0.0;
    }
    std::vector<double> contrib(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        contrib[i] = 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    }
    return blocked ? blocked_sum(contrib) : block_sum_serial(contrib);
}

} // namespace

double trapezoid_serial(std::span<const double> xs, std::span<const double> ys) {
    return trapezoid_intervals(xs, ys, false);
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
    return trapezoid_intervals(xs, ys, true);
}

} // namespace vacuakit::kernels
