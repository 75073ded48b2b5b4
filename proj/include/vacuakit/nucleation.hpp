#pragma once

namespace vacuakit {

//! Inputs of the thin-wall decay-rate exponential.
struct CdlInputs {
    double prefactor_a = 1.0;
    double bounce_action_sb = 0.0;
    double true_vacuum_density_rho = 0.0;
};

//! A rate with an explicit saturation marker for overflowing exponents.
struct RateResult {
    double value;
    bool saturated;
};

//! Inputs of the pair-density estimate. field_term bundles the whole
//! applied-field contribution and defaults to zero.
struct GarrigaInputs {
    double mass_m = 1.0;
    double field_term = 0.0;
    double euclidean_action_se = 0.0;
};

//! Inputs of the transport tunneling amplitude.
struct TunnelInputs {
    double norm_c1;
    double norm_c2;
    double mstar;
    double x;
    double length_l;
    double alpha;
};

//! TunnelInputs with alpha defaulted to 1 / length_l.
TunnelInputs make_tunnel_inputs(double norm_c1, double norm_c2, double mstar,
                                double x, double length_l);

//! Surface contribution -(3/8) rho of the decay exponent.
double cdl_surface_term(double rho);

//! Sub-Planckian lower bound on the true-vacuum energy density.
double rho_t_lower_bound(double m, double planck_mass);

//! Decay rate A exp(-S_b + S_t). Overflowing exponents saturate to an
//! infinite value with the saturated flag set instead of trapping.
RateResult cdl_rate(const CdlInputs& inputs);

//! Nucleated-pair number density per unit length.
double garriga_density(const GarrigaInputs& inputs);

//! Transport tunneling amplitude between the initial and final functionals.
//! Evaluated in a form that never multiplies an overflowing cosh by a
//! vanishing exponential.
double tunneling_amplitude(const TunnelInputs& inputs);

//! Normalization constant of a Gaussian wave functional of width brace_i
//! over a length-L momentum cell, via adaptive quadrature.
double normalization_constant(double brace_i, double length_l);

} // namespace vacuakit
