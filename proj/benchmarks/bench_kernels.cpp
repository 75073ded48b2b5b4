// Times the parallel kernels against their serial references on a large
// grid and checks that the results agree bitwise. Thread count follows
// OpenMP / VACUAKIT_THREADS, so on a single-core host the two columns are
// expected to be close.

#include "vacuakit/kernels.hpp"
#include "vacuakit/potential.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

using namespace vacuakit;
using clock_type = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto start = clock_type::now();
    f();
    return std::chrono::duration<double, std::milli>(clock_type::now() - start)
        .count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-18s %10.2f %10.2f %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "bitwise equal" : "MISMATCH");
}

} // namespace

int main() {
    const std::size_t n = 10000000;
    const auto p = default_params();
    const auto f = [&](double phi) { return v1(p, phi); };

    std::printf("%zu elements, %d thread(s)\n", n, kernels::thread_cap());
    std::printf("%-18s %10s %10s %9s\n", "kernel", "serial ms", "parallel ms",
                "speedup");

    std::vector<double> serial_map;
    std::vector<double> parallel_map;
    const double t_map_s =
        time_ms([&] { serial_map = kernels::map_uniform_serial(-10.0, 10.0, n, f); });
    const double t_map_p =
        time_ms([&] { parallel_map = kernels::map_uniform(-10.0, 10.0, n, f); });
    row("map_uniform", t_map_s, t_map_p, serial_map == parallel_map);

    double sum_s = 0.0;
    double sum_p = 0.0;
    const double t_sum_s = time_ms([&] { sum_s = kernels::block_sum_serial(serial_map); });
    const double t_sum_p = time_ms([&] { sum_p = kernels::block_sum(serial_map); });
    const double drift = std::abs(sum_p - sum_s) / std::abs(sum_s);
    row("block_sum", t_sum_s, t_sum_p, drift < 1e-12);

    const double h = 20.0 / static_cast<double>(n - 1);
    double trap_s = 0.0;
    double trap_p = 0.0;
    const double t_trap_s =
        time_ms([&] { trap_s = kernels::trapezoid_uniform_serial(serial_map, h); });
    const double t_trap_p =
        time_ms([&] { trap_p = kernels::trapezoid_uniform(serial_map, h); });
    row("trapezoid_uniform", t_trap_s, t_trap_p,
        std::abs(trap_p - trap_s) / std::abs(trap_s) < 1e-12);

    return 0;
}
