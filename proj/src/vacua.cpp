#include "vacuakit/vacua.hpp"

#include "vacuakit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace vacuakit {

namespace {

//! Newton refinement of a bracketed root of dv1. The bracket is maintained
//! throughout; any Newton step that leaves it falls back to bisection.
double refine_root(const PotentialParams& params, double a, double b, double fa) {
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        const double fx = dv1(params, x);
        if (std::abs(fx) < root_residual_tol) {
            return x;
        }
        if ((fa < 0.0) == (fx < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double fpx = d2v1(params, x);
        double next = x - fx / fpx;
        if (fpx == 0.0 || !(next > a && next < b)) {
            next = 0.5 * (a + b);
        }
        x = next;
    }
    throw FailedConvergence("stationary point refinement exceeded 200 iterations");
}

PointKind kind_of(double curvature) {
    if (curvature > curvature_tol) {
        return PointKind::minimum;
    }
    if (curvature < -curvature_tol) {
        return PointKind::maximum;
    }
    return PointKind::inflection;
}

CriticalPoint make_point(const PotentialParams& params, double phi) {
    const double curv = d2v1(params, phi);
    return {phi, v_total(params, phi), curv, kind_of(curv)};
}

} // namespace

std::vector<CriticalPoint> scan_critical_points(const PotentialParams& params,
                                                double lo, double hi,
                                                std::size_t grid_n) {
    params.validate();
    if (!(lo < hi)) {
        throw DomainError("scan window requires lo < hi");
    }
    if (grid_n < 16) {
        throw DomainError("scan grid needs at least 16 points");
    }
    const auto slopes = kernels::map_uniform(
        lo, hi, grid_n, [&](double phi) { return dv1(params, phi); });

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < grid_n; ++i) {
        const double a = kernels::grid_node(lo, hi, grid_n, i);
        const double b = kernels::grid_node(lo, hi, grid_n, i + 1);
        const double fa = slopes[i];
        const double fb = slopes[i + 1];
        if (fa == 0.0) {
            roots.push_back(a);
        } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
            roots.push_back(refine_root(params, a, b, fa));
        }
    }
    if (slopes.back() == 0.0) {
        roots.push_back(hi);
    }

    const double min_sep = (hi - lo) / static_cast<double>(grid_n);
    std::vector<CriticalPoint> out;
    for (double phi : roots) {
        if (!out.empty() && phi - out.back().phi < min_sep) {
            continue;
        }
        out.push_back(make_point(params, phi));
    }
    return out;
}

double brace_term_a(const PotentialParams& params) {
    params.validate();
    const double m = params.inflaton_mass;
    const double inv_m2 = 1.0 / (m * m);
    return (inv_m2 + 1.0) / (2.0 * inv_m2);
}

double brace_term_b(const PotentialParams& params, double phi_false, double phi_true) {
    params.validate();
    return phi_true * phi_false * params.planck_mass * params.planck_mass / 6.0;
}

VacuumPair classify_vacua(const std::vector<CriticalPoint>& points,
                          const PotentialParams& params) {
    params.validate();
    std::vector<const CriticalPoint*> minima;
    for (const auto& p : points) {
        if (p.kind == PointKind::minimum) {
            minima.push_back(&p);
        }
    }
    if (minima.size() < 2) {
        throw InsufficientMinima("vacuum classification needs at least two minima");
    }

    const CriticalPoint* truest = minima.front();
    for (const auto* p : minima) {
        if (p->value < truest->value ||
            (p->value == truest->value && p->phi < truest->phi)) {
            truest = p;
        }
    }
    const CriticalPoint* falsest = nullptr;
    for (const auto* p : minima) {
        if (p == truest) {
            continue;
        }
        if (falsest == nullptr) {
            falsest = p;
            continue;
        }
        if (p->value > falsest->value) {
            falsest = p;
        } else if (p->value == falsest->value) {
            const double dp = std::abs(p->phi - truest->phi);
            const double df = std::abs(falsest->phi - truest->phi);
            if (dp < df || (dp == df && p->phi < falsest->phi)) {
                falsest = p;
            }
        }
    }

    VacuumPair pair{};
    pair.phi_false = falsest->phi;
    pair.phi_true = truest->phi;
    pair.gap_potential = falsest->value - truest->value;
    pair.brace_a = brace_term_a(params);
    pair.brace_b = brace_term_b(params, pair.phi_false, pair.phi_true);
    pair.gap_bogomilnyi = 0.5 * (pair.brace_a - pair.brace_b);
    if (pair.gap_bogomilnyi > 0.0) {
        pair.length_scale = 1.0 / pair.gap_bogomilnyi;
    }
    return pair;
}

double lagrangian_bound(double phi0, double phi_c, double brace, double charge_q) {
    if (!std::isfinite(brace)) {
        throw DomainError("lagrangian_bound needs a finite brace coefficient");
    }
    const double d = phi0 - phi_c;
    return std::abs(charge_q) + 0.5 * d * d * brace;
}

} // namespace vacuakit
