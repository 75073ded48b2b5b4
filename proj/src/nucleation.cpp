#include "vacuakit/nucleation.hpp"

#include "vacuakit/errors.hpp"
#include "vacuakit/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace vacuakit {

namespace {

constexpr double pi = std::numbers::pi;

// exp overflows to infinity just above this argument.
constexpr double exp_overflow_arg = 709.0;

} // namespace

TunnelInputs make_tunnel_inputs(double norm_c1, double norm_c2, double mstar,
                                double x, double length_l) {
    if (!(length_l > 0.0)) {
        throw DomainError("make_tunnel_inputs needs length_l > 0");
    }
    return {norm_c1, norm_c2, mstar, x, length_l, 1.0 / length_l};
}

double cdl_surface_term(double rho) {
    if (rho < 0.0) {
        throw NegativeEnergy("cdl_surface_term needs rho >= 0");
    }
    return -0.375 * rho;
}

double rho_t_lower_bound(double m, double planck_mass) {
    if (!(m > 0.0)) {
        throw DomainError("rho_t_lower_bound needs m > 0");
    }
    if (!(planck_mass > 0.0)) {
        throw DomainError("rho_t_lower_bound needs planck_mass > 0");
    }
    return (60.0 / (4.0 * pi)) * planck_mass * planck_mass * m * m;
}

RateResult cdl_rate(const CdlInputs& inputs) {
    if (!(inputs.prefactor_a >= 0.0)) {
        throw DomainError("cdl_rate needs a non-negative prefactor");
    }
    const double st = cdl_surface_term(inputs.true_vacuum_density_rho);
    const double arg = -inputs.bounce_action_sb + st;
    if (arg > exp_overflow_arg) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {inputs.prefactor_a * std::exp(arg), false};
}

double garriga_density(const GarrigaInputs& inputs) {
    if (!(inputs.mass_m >= 0.0)) {
        throw DomainError("garriga_density needs mass_m >= 0");
    }
    if (!(inputs.field_term >= 0.0)) {
        throw DomainError("garriga_density needs field_term >= 0");
    }
    return (1.0 / (2.0 * pi))
         * std::sqrt(inputs.mass_m * inputs.mass_m + inputs.field_term)
         * std::exp(-inputs.euclidean_action_se);
}

double tunneling_amplitude(const TunnelInputs& inputs) {
    if (!(inputs.x > 0.0) || !(inputs.length_l > 0.0)) {
        throw DomainError("tunneling_amplitude needs x > 0 and length_l > 0");
    }
    if (!(inputs.norm_c1 > 0.0) || !(inputs.norm_c2 > 0.0) ||
        !(inputs.mstar > 0.0) || !(inputs.alpha > 0.0)) {
        throw DomainError("tunneling_amplitude needs positive norms, mstar and alpha");
    }
    const double a = 2.0 * std::sqrt(inputs.x / (2.0 * inputs.length_l))
                   - std::sqrt(inputs.length_l / (2.0 * inputs.x));
    const double b = -inputs.alpha * inputs.length_l
                   * (inputs.length_l / (2.0 * inputs.x));
    const double w = 0.5 * (std::exp(a + b) + std::exp(-a + b));
    return inputs.norm_c1 * inputs.norm_c2 / inputs.mstar * w;
}

double normalization_constant(double brace_i, double length_l) {
    if (!(brace_i > 0.0)) {
        throw DomainError("normalization_constant needs brace_i > 0");
    }
    if (!(length_l > 0.0)) {
        throw DomainError("normalization_constant needs length_l > 0");
    }
    const double weight = length_l * length_l / (2.0 * pi);
    const double integral = integrate(
        [&](double u) { return weight * std::exp(-2.0 * brace_i * u * u); },
        0.0, length_l);
    return 1.0 / std::sqrt(integral);
}

} // namespace vacuakit
