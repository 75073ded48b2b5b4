#include "vacuakit/units.hpp"

namespace vacuakit::units {

namespace {

constexpr double planck_mass_gev = 1.22e19;
constexpr double planck_length_m = 1.616e-35;
constexpr double electron_mass_planck = 4.338e-20;

} // namespace

UnitSystem default_units() {
    // The time constant is derived from the quoted length so the pair stays
    // exactly consistent with the stored speed of light.
    return {planck_mass_gev, planck_length_m, planck_length_m / speed_of_light_m_s, true};
}

UnitSystem codata_units() {
    return {1.220890e19, 1.616255e-35, 5.391247e-44, true};
}

MassScales default_mass_scales() {
    return {electron_mass_planck, 2.0 * electron_mass_planck};
}

double effective_mass() {
    return default_mass_scales().effective_mass_mstar;
}

} // namespace vacuakit::units
