#pragma once

#include "vacuakit/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace vacuakit {

//! One Gauss-Kronrod 7-15 node on [0, 1]: abscissa, Kronrod weight, Gauss
//! weight. A zero Gauss weight marks a Kronrod-only node.
struct GaussKronrodRow {
    double x;
    double wk;
    double wg;
};

inline constexpr GaussKronrodRow gk15_nodes[8] = {
    {0.991455371120813, 0.022935322010529, 0.0},
    {0.949107912342759, 0.063092092629979, 0.129484966168870},
    {0.864864423359769, 0.104790010322250, 0.0},
    {0.741531185599394, 0.140653259715525, 0.279705391489277},
    {0.586087235467691, 0.169004726639267, 0.0},
    {0.405845151377397, 0.190350578064785, 0.381830050505119},
    {0.207784955007898, 0.204432940075298, 0.0},
    {0.000000000000000, 0.209482141084728, 0.417959183673469},
};

namespace detail {

//! Kronrod estimate of the integral over [a, b] and the |K15 - G7| error
//! bound for it.
template <class F>
void gk15(F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = gk15_nodes[7].wk * fc;
    double g = gk15_nodes[7].wg * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk15_nodes[i].x;
        const double fsum = f(c - dx) + f(c + dx);
        k += gk15_nodes[i].wk * fsum;
        g += gk15_nodes[i].wg * fsum;
    }
    kronrod = k * h;
    err = std::abs((k - g) * h);
}

template <class F>
double adapt(F& f, double a, double b, double tol_abs, int depth) {
    double k;
    double err;
    gk15(f, a, b, k, err);
    if (err <= tol_abs) {
        return k;
    }
    if (depth <= 0) {
        throw QuadratureFailure("adaptive quadrature hit the subdivision depth cap");
    }
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol_abs, depth - 1)
         + adapt(f, c, b, 0.5 * tol_abs, depth - 1);
}

} // namespace detail

//! Adaptive Gauss-Kronrod integral of f over [a, b], bisecting until the
//! summed error bound meets rel_tol against the first whole-interval
//! estimate. Throws QuadratureFailure when the depth cap is hit first.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10, int max_depth = 48) {
    auto& fn = f;
    double k0;
    double err0;
    detail::gk15(fn, a, b, k0, err0);
    const double tol_abs =
        std::max(rel_tol * std::abs(k0), std::numeric_limits<double>::min());
    if (err0 <= tol_abs) {
        return k0;
    }
    const double c = 0.5 * (a + b);
    return detail::adapt(fn, a, c, 0.5 * tol_abs, max_depth)
         + detail::adapt(fn, c, b, 0.5 * tol_abs, max_depth);
}

} // namespace vacuakit
