#pragma once

#include "vacuakit/potential.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vacuakit {

enum class PointKind { minimum, maximum, inflection };

//! A refined stationary point of the landscape.
struct CriticalPoint {
    double phi;
    double value;
    double curvature;
    PointKind kind;
};

//! Classified false/true vacuum pair with both gap measures. The length
//! scale is absent whenever the brace gap is not positive.
struct VacuumPair {
    double phi_false;
    double phi_true;
    double gap_potential;
    double gap_bogomilnyi;
    double brace_a;
    double brace_b;
    std::optional<double> length_scale;
};

//! Residual target |dv1| for refined stationary points.
inline constexpr double root_residual_tol = 1e-10;

//! Curvature magnitude below which a stationary point counts as an
//! inflection.
inline constexpr double curvature_tol = 1e-8;

//! Locate the stationary points of the landscape in [lo, hi]. Sign changes
//! of dv1 over a grid_n-point grid are bracketed and refined with bisection
//! guarded Newton steps until |dv1| < root_residual_tol. Points come back
//! sorted by phi, never closer than one grid cell; an empty list means no
//! sign change was found. Throws FailedConvergence past 200 refinement
//! iterations.
std::vector<CriticalPoint> scan_critical_points(const PotentialParams& params,
                                                double lo, double hi,
                                                std::size_t grid_n);

//! First coefficient of the vacuum-gap decomposition, a function of the
//! inflaton mass alone.
double brace_term_a(const PotentialParams& params);

//! Second coefficient, built from the product of the two vacuum positions.
double brace_term_b(const PotentialParams& params, double phi_false, double phi_true);

//! Classify the deepest minimum as the true vacuum and the highest remaining
//! minimum as the false vacuum, then attach the potential gap, the brace
//! decomposition gap, and the separation length. Needs at least two minima
//! (InsufficientMinima otherwise). Ties among false-vacuum candidates go to
//! the minimum nearest the true vacuum.
VacuumPair classify_vacua(const std::vector<CriticalPoint>& points,
                          const PotentialParams& params);

//! Lower bound on the Euclidean Lagrangian density: topological charge plus
//! quadratic remainder.
double lagrangian_bound(double phi0, double phi_c, double brace, double charge_q);

} // namespace vacuakit
