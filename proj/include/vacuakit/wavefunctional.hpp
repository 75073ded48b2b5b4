#pragma once

#include "vacuakit/potential.hpp"
#include "vacuakit/vacua.hpp"

#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace vacuakit {

//! Discretized 1-D field configuration over strictly increasing positions.
struct FieldGrid {
    std::vector<double> xs;
    std::vector<double> values;

    //! Throws GridMismatch on a length mismatch, DomainError on fewer than
    //! two nodes or non-increasing positions.
    void validate() const;
};

//! Gaussian wave functional over field configurations, peaked on its center.
struct GaussianFunctional {
    FieldGrid center;
    double width_alpha;
    double norm_c;
};

//! Static action of the configuration: gradient energy plus v1, integrated
//! over the grid. The gradient term is exact for the piecewise linear
//! interpolant; the potential term uses the trapezoid rule.
double static_action(const PotentialParams& params, const FieldGrid& grid);

//! Amplitude norm_c * exp(-alpha * integral of (phi - center)^2 dx). The
//! configuration must share the center's positions exactly.
double evaluate_functional(const GaussianFunctional& g, const FieldGrid& phi);

//! Net winding of the configuration in units of 2 pi.
double topological_charge(const FieldGrid& grid);

//! Momentum-space amplitude of a unit-height box of length L. The removable
//! k = 0 singularity returns the limit value.
double thin_wall_basis(double k, double length_l);

//! Box configuration on [-L, 2L]: `height` on the closed middle third,
//! zero outside.
FieldGrid box_profile(double length_l, double height = 2.0 * std::numbers::pi,
                      std::size_t grid_n = 4096);

//! Initial and final Gaussian functionals of the false-to-true transition on
//! the given positions. The initial center sits a small step of
//! epsilon_scale * (phi_true - phi_false) off the false vacuum; the final
//! center is a bubble of true vacuum, one separation length wide, in a false
//! vacuum background. Both widths are the inverse separation length; both
//! norms come from normalization_constant. Throws NonPositiveGap when the
//! pair carries no length scale.
std::pair<GaussianFunctional, GaussianFunctional>
initial_final_pair(const PotentialParams& params, const VacuumPair& vacua,
                   const std::vector<double>& xs, double epsilon_scale = 1e-6);

//! Two-column CSV (header "x,phi") of the configuration.
std::string field_grid_csv(const FieldGrid& grid);

} // namespace vacuakit
