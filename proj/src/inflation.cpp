#include "vacuakit/inflation.hpp"

#include "vacuakit/format.hpp"

#include <cmath>
#include <numbers>

namespace vacuakit {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

double hubble_sq(double v) {
    if (v < 0.0) {
        throw NegativeEnergy("hubble_sq needs a non-negative energy density");
    }
    return (8.0 * pi / 3.0) * v;
}

SlowRollReport slow_roll_report(const PotentialParams& params, double phi,
                                double flatness_threshold, bool use_total) {
    params.validate();
    if (!(flatness_threshold > 0.0)) {
        throw DomainError("flatness_threshold must be positive");
    }
    const double v = use_total ? v_total(params, phi) : v1(params, phi);
    if (v == 0.0) {
        throw ZeroPotential("potential vanishes at the requested field value");
    }
    const double d1 = dv1(params, phi);
    const double d2 = d2v1(params, phi);
    const double h2 = hubble_sq(v);
    // Reduced Planck mass squared, M_p^2 / (8 pi).
    const double mt2 = params.planck_mass * params.planck_mass / (8.0 * pi);
    const double ratio = std::abs(d2) / h2;
    SlowRollReport r{};
    r.phi = phi;
    r.v = v;
    r.d2v = d2;
    r.hubble_sq = h2;
    r.flatness_ratio = ratio;
    r.epsilon = 0.5 * mt2 * (d1 / v) * (d1 / v);
    r.eta = mt2 * d2 / v;
    r.flat_ok = ratio < flatness_threshold;
    r.pressure_ok = std::abs(r.epsilon) < 1.0 && std::abs(r.eta) < 1.0;
    return r;
}

double phi0_threshold() {
    return std::sqrt(60.0 / (2.0 * pi));
}

double phi_star_estimate(double m, double planck_mass) {
    if (!(m > 0.0)) {
        throw DomainError("phi_star_estimate needs m > 0");
    }
    if (!(planck_mass > 0.0)) {
        throw DomainError("phi_star_estimate needs planck_mass > 0");
    }
    return std::pow(3.0 / (16.0 * pi), 0.25) * std::pow(planck_mass, 1.5)
         / std::sqrt(m);
}

double phi_classical_roll(double phi0, double m, double g, double t) {
    if (!(g > 0.0)) {
        throw DomainError("phi_classical_roll needs g > 0");
    }
    if (!(t >= 0.0)) {
        throw DomainError("phi_classical_roll needs t >= 0");
    }
    return phi0 - m * t / std::sqrt(12.0 * pi * g);
}

double dilaton_coupling(double phi) {
    return std::exp(phi);
}

std::string slow_roll_csv_header() {
    return "phi,v,d2v,hubble_sq,flatness_ratio,epsilon,eta,flat_ok,pressure_ok";
}

std::string slow_roll_csv_row(const SlowRollReport& r) {
    std::string row;
    row += format_g17(r.phi);
    row += ',';
    row += format_g17(r.v);
    row += ',';
    row += format_g17(r.d2v);
    row += ',';
    row += format_g17(r.hubble_sq);
    row += ',';
    row += format_g17(r.flatness_ratio);
    row += ',';
    row += format_g17(r.epsilon);
    row += ',';
    row += format_g17(r.eta);
    row += ',';
    row += r.flat_ok ? "true" : "false";
    row += ',';
    row += r.pressure_ok ? "true" : "false";
    return row;
}

} // namespace vacuakit
