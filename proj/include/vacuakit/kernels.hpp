#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vacuakit::kernels {

//! Number of threads the parallel kernels may use. Reads VACUAKIT_THREADS
//! (clamped to >= 1); falls back to the OpenMP default when unset. Returns 1
//! in builds without OpenMP.
int thread_cap();

//! Fixed block length for the deterministic reductions below. Partial sums
//! are formed per block and combined in block order, so results do not depend
//! on the thread count.
inline constexpr std::size_t reduction_block = 8192;

//! i-th node of an n-point uniform grid on [lo, hi], endpoints included.
inline double grid_node(double lo, double hi, std::size_t n, std::size_t i) {
    if (n < 2) {
        return lo;
    }
    if (i + 1 == n) {
        return hi;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    return lo + step * static_cast<double>(i);
}

//! Serial reference for map_uniform, kept for parity tests and benchmarks.
template <class F>
std::vector<double> map_uniform_serial(double lo, double hi, std::size_t n, F&& f) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f(grid_node(lo, hi, n, i));
    }
    return out;
}

//! Evaluate f at every node of an n-point uniform grid. Each element is
//! independent, so the result is bitwise identical to map_uniform_serial.
template <class F>
std::vector<double> map_uniform(double lo, double hi, std::size_t n, F&& f) {
    std::vector<double> out(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(vacuakit::kernels::thread_cap())
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            f(grid_node(lo, hi, n, static_cast<std::size_t>(i)));
    }
    return out;
}

//! Plain left-to-right accumulation; serial reference for block_sum.
double block_sum_serial(std::span<const double> xs);

//! Deterministic parallel sum: fixed-size blocks accumulated left to right,
//! partials combined in block order.
double block_sum(std::span<const double> xs);

//! Trapezoid rule on a uniform grid of spacing h (serial reference).
double trapezoid_uniform_serial(std::span<const double> ys, double h);

//! Trapezoid rule on a uniform grid of spacing h (blocked, deterministic).
double trapezoid_uniform(std::span<const double> ys, double h);

//! Trapezoid rule on an arbitrary strictly increasing grid (serial reference).
double trapezoid_serial(std::span<const double> xs, std::span<const double> ys);

//! Trapezoid rule on an arbitrary strictly increasing grid (blocked,
//! deterministic).
double trapezoid(std::span<const double> xs, std::span<const double> ys);

} // namespace vacuakit::kernels
