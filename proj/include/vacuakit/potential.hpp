#pragma once

#include "vacuakit/errors.hpp"

#include <cmath>
#include <numbers>

namespace vacuakit {

//! Parameters of the tilted cosine landscape: a cosine ridge of the given
//! amplitude on top of a quadratic well centered at phi_star, with an
//! optional constant energy offset.
struct PotentialParams {
    double planck_mass = 1.0;
    double inflaton_mass = 0.441;
    double phi_star = 0.99 * std::numbers::pi;
    double cosine_amplitude = 0.5989;
    double vacuum_offset = 0.0;

    //! Set when the inflaton mass is not small against the Planck mass. Not
    //! an error: the default parameter set itself is only a factor ~2 below.
    bool heavy_inflaton() const { return inflaton_mass >= planck_mass; }

    //! Throws DomainError on non-positive masses or negative amplitude/offset.
    void validate() const {
        if (!(planck_mass > 0.0)) {
            throw DomainError("planck_mass must be positive");
        }
        if (!(inflaton_mass > 0.0)) {
            throw DomainError("inflaton_mass must be positive");
        }
        if (!(cosine_amplitude >= 0.0)) {
            throw DomainError("cosine_amplitude must be non-negative");
        }
        if (!(vacuum_offset >= 0.0)) {
            throw DomainError("vacuum_offset must be non-negative");
        }
    }
};

//! Default parameter set: M_p = 1, m = 0.441, amplitude 0.5989,
//! phi_star = 0.99 pi, zero offset.
inline PotentialParams default_params() { return {}; }

//! Extended sine-Gordon quartic template.
struct ESGParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double phi0 = 0.0;
};

//! Tilted cosine potential.
inline double v1(const PotentialParams& p, double phi) {
    const double mp2 = p.planck_mass * p.planck_mass;
    const double d = phi - p.phi_star;
    return mp2 * p.cosine_amplitude * (1.0 - std::cos(phi))
         + 0.5 * p.inflaton_mass * p.inflaton_mass * d * d;
}

//! Offset landscape: vacuum_offset + v1. Shares every stationary point
//! with v1.
inline double v_total(const PotentialParams& p, double phi) {
    return p.vacuum_offset + v1(p, phi);
}

//! First derivative of v1.
inline double dv1(const PotentialParams& p, double phi) {
    const double mp2 = p.planck_mass * p.planck_mass;
    return mp2 * p.cosine_amplitude * std::sin(phi)
         + p.inflaton_mass * p.inflaton_mass * (phi - p.phi_star);
}

//! Second derivative of v1.
inline double d2v1(const PotentialParams& p, double phi) {
    const double mp2 = p.planck_mass * p.planck_mass;
    return mp2 * p.cosine_amplitude * std::cos(phi)
         + p.inflaton_mass * p.inflaton_mass;
}

//! Quartic double-well template value at phi.
inline double v_extended(const ESGParams& e, double phi) {
    const double d = phi - e.phi0;
    const double s = phi * phi - e.phi0 * e.phi0;
    return e.c1 * d * d - 4.0 * e.c2 * phi * e.phi0 * d * d + e.c2 * s * s;
}

} // namespace vacuakit
