#pragma once

#include "vacuakit/potential.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace vacuakit {

//! Inputs of the reconciliation report and of sweep rows.
struct ReportInputs {
    PotentialParams params{};
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t grid_n = 2001;
    double flatness_threshold = 1.0;
    double bounce_action_sb = 0.0;
    double prefactor_a = 1.0;
};

//! Report text plus a flag set when a section had to be degraded.
struct ReportResult {
    std::string json;
    bool warning;
};

//! Default scan window: two cosine periods centered on phi_star.
void default_window(const PotentialParams& params, double& lo, double& hi);

//! ReportInputs with default parameters and the default window.
ReportInputs default_report_inputs();

//! Build the reconciliation report: published reference values beside
//! recomputed ones, each with a source tag and a discrepancy flag. Sections
//! that cannot be computed are annotated instead of aborting the report.
ReportResult build_report(const ReportInputs& inputs);

//! Vacua summary for one parameter setting of a sweep. ok is false when the
//! window held fewer than two minima; the numeric fields are then unset.
struct SweepRow {
    bool ok = false;
    double phi_false = 0.0;
    double phi_true = 0.0;
    double gap_potential = 0.0;
    double gap_bogomilnyi = 0.0;
    double brace_a = 0.0;
    double brace_b = 0.0;
    std::optional<double> length_scale;
};

//! Evaluate the vacua summary for one parameter setting.
SweepRow sweep_row(const ReportInputs& inputs);

//! Apply a sweep parameter by name (m, phi_star, cosine_amplitude).
//! Returns false for an unknown name.
bool apply_sweep_param(PotentialParams& params, const std::string& name, double value);

} // namespace vacuakit
