#pragma once

#include "vacuakit/potential.hpp"

#include <string>

namespace vacuakit {

//! Slow-roll diagnostics at a single field value.
struct SlowRollReport {
    double phi;
    double v;
    double d2v;
    double hubble_sq;
    double flatness_ratio;
    double epsilon;
    double eta;
    bool flat_ok;
    bool pressure_ok;
};

//! Squared expansion rate (8 pi / 3) v in the G = 1 normalization.
double hubble_sq(double v);

//! Slow-roll diagnostics of v1 at phi (v_total when use_total is set).
//! flat_ok compares |d2v| / H^2 against flatness_threshold; pressure_ok
//! requires |epsilon| < 1 and |eta| < 1. Throws ZeroPotential when the
//! potential vanishes at phi.
SlowRollReport slow_roll_report(const PotentialParams& params, double phi,
                                double flatness_threshold = 1.0,
                                bool use_total = false);

//! Field threshold above which classical drift dominates quantum jitter.
double phi0_threshold();

//! Field value where classical and quantum fluctuations are comparable.
double phi_star_estimate(double m, double planck_mass);

//! Linear classical roll-down of the field from phi0 after time t.
double phi_classical_roll(double phi0, double m, double g, double t);

//! Dilaton-style gauge coupling map exp(phi).
double dilaton_coupling(double phi);

//! Header line for slow-roll CSV rows.
std::string slow_roll_csv_header();

//! One CSV row for r, matching slow_roll_csv_header.
std::string slow_roll_csv_row(const SlowRollReport& r);

} // namespace vacuakit
