#pragma once

namespace vacuakit::units {

//! Planck-scale reference constants. The normalized system sets
//! hbar = c = G = M_p = 1; the SI fields are kept for documentation output.
struct UnitSystem {
    double planck_mass_gev;
    double planck_length_m;
    double planck_time_s;
    bool normalized;

    //! Unit-carrying accessors, identically 1 in the normalized system.
    double length() const { return normalized ? 1.0 : planck_length_m; }
    double mass() const { return normalized ? 1.0 : planck_mass_gev; }
    double time() const { return normalized ? 1.0 : planck_time_s; }
};

//! Electron and effective tunneling masses in Planck units.
struct MassScales {
    double electron_mass_planck;
    double effective_mass_mstar;
};

//! Speed of light in m/s, relating the stored length and time.
inline constexpr double speed_of_light_m_s = 299792458.0;

//! Normalized system carrying SI reference values at their quoted precision.
UnitSystem default_units();

//! Normalized system carrying CODATA SI values instead of the quoted ones.
UnitSystem codata_units();

//! Canonical mass scales. The effective mass is derived as exactly twice the
//! electron mass; it is never stored as an independent constant.
MassScales default_mass_scales();

//! Effective tunneling mass m* in Planck units.
double effective_mass();

} // namespace vacuakit::units
