#include "vacuakit/report.hpp"

#include "vacuakit/format.hpp"
#include "vacuakit/inflation.hpp"
#include "vacuakit/nucleation.hpp"
#include "vacuakit/units.hpp"
#include "vacuakit/vacua.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

namespace vacuakit {

namespace {

constexpr double pi = std::numbers::pi;

//! Relative deviation above which a published and a recomputed value are
//! flagged as discrepant.
constexpr double discrepancy_rel_tol = 1e-3;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

//! Insertion-ordered pretty JSON emitter with 17-significant-digit numbers.
class JsonWriter {
public:
    void begin_object() { open('{', nullptr); }
    void begin_object(const char* key) { open('{', key); }
    void begin_array(const char* key) { open('[', key); }
    void end_object() { close('}'); }
    void end_array() { close(']'); }

    void field(const char* key, double v) {
        sep();
        out_ += quoted(key);
        out_ += ": ";
        out_ += std::isfinite(v) ? format_g17(v) : "null";
    }
    void field(const char* key, bool v) {
        sep();
        out_ += quoted(key);
        out_ += v ? ": true" : ": false";
    }
    void field(const char* key, std::size_t v) {
        sep();
        out_ += quoted(key);
        out_ += ": ";
        out_ += std::to_string(v);
    }
    void field(const char* key, const std::string& v) {
        sep();
        out_ += quoted(key);
        out_ += ": ";
        out_ += quoted(v.c_str());
    }
    void field_null(const char* key) {
        sep();
        out_ += quoted(key);
        out_ += ": null";
    }
    void element(const std::string& v) {
        sep();
        out_ += quoted(v.c_str());
    }

    std::string take() {
        out_ += '\n';
        return std::move(out_);
    }

private:
    std::string out_;
    std::vector<bool> has_items_;

    static std::string quoted(const char* s) {
        return '"' + json_escape(s) + '"';
    }
    void indent() { out_.append(2 * has_items_.size(), ' '); }
    void sep() {
        if (has_items_.empty()) {
            return;
        }
        out_ += has_items_.back() ? ",\n" : "\n";
        has_items_.back() = true;
        indent();
    }
    void open(char c, const char* key) {
        sep();
        if (key != nullptr) {
            out_ += quoted(key);
            out_ += ": ";
        }
        out_ += c;
        has_items_.push_back(false);
    }
    void close(char c) {
        const bool had = has_items_.back();
        has_items_.pop_back();
        if (had) {
            out_ += '\n';
            indent();
        }
        out_ += c;
    }
};

//! One reconciled quantity: optional published value with its source tag,
//! optional recomputed value.
struct Qty {
    std::optional<double> paper;
    const char* ref = nullptr;
    std::optional<double> computed;
};

void emit_qty(JsonWriter& w, const char* key, const Qty& q) {
    w.begin_object(key);
    if (q.paper.has_value()) {
        w.field("paper_value", *q.paper);
    } else {
        w.field_null("paper_value");
    }
    if (q.ref != nullptr) {
        w.field("paper_ref", std::string(q.ref));
    } else {
        w.field_null("paper_ref");
    }
    const bool have_computed = q.computed.has_value() && std::isfinite(*q.computed);
    if (have_computed) {
        w.field("computed_value", *q.computed);
    } else {
        w.field_null("computed_value");
    }
    if (q.paper.has_value() && have_computed) {
        const bool flag =
            std::abs(*q.computed - *q.paper) > discrepancy_rel_tol * std::abs(*q.paper);
        w.field("discrepancy_flag", flag);
    } else {
        w.field_null("discrepancy_flag");
    }
    w.end_object();
}

std::optional<double> opt(const std::optional<SlowRollReport>& r,
                          double SlowRollReport::* member) {
    if (!r.has_value()) {
        return std::nullopt;
    }
    return (*r).*member;
}

} // namespace

void default_window(const PotentialParams& params, double& lo, double& hi) {
    lo = params.phi_star - 2.0 * pi;
    hi = params.phi_star + 2.0 * pi;
}

ReportInputs default_report_inputs() {
    ReportInputs in;
    default_window(in.params, in.window_lo, in.window_hi);
    return in;
}

ReportResult build_report(const ReportInputs& in) {
    in.params.validate();
    if (!(in.window_lo < in.window_hi)) {
        throw DomainError("report window requires lo < hi");
    }
    if (!(in.flatness_threshold > 0.0)) {
        throw DomainError("flatness_threshold must be positive");
    }

    bool warning = false;
    std::vector<std::string> annotations = {
        "Eq. 25 bracketing read as cosh(2*sqrt(x/(2L)) - sqrt(L/(2x))) * "
        "exp(-alpha*L*(L/(2x))); the leading 2 multiplies only the first radical",
        "Sec. II sentence 'L = dE = (.041)^-1 = 24.39' implemented as L = 1/dE",
        "Eq. 16a coefficient implemented as printed, (m^-2 + 1)/(2*m^-2)",
        "App. I Eq. 10 integrand read as [phi - phi_T]^2 rather than the "
        "literal constant [phi_T]^2",
        "phi_star is also quoted as 1.03*pi (Sec. I) and 1.125*pi (Sec. VII); "
        "the config default keeps 0.99*pi (Eq. 12)",
        "garriga_n uses defaults mass_m = 1, field_term = 0, "
        "euclidean_action_se = 0; Sec. II downplays the applied-field term",
    };

    const auto points =
        scan_critical_points(in.params, in.window_lo, in.window_hi, in.grid_n);
    std::optional<VacuumPair> pair;
    try {
        pair = classify_vacua(points, in.params);
    } catch (const InsufficientMinima& e) {
        annotations.push_back(std::string("InsufficientMinima: ") + e.what() +
                              "; vacuum-dependent sections are omitted");
        warning = true;
    }

    // Published reference inputs reused by the brace recomputation and the
    // published tunneling pipeline.
    const double phi_f_pub = 0.5472;
    const double phi_t_pub = 5.457;
    const double l_pub = 24.39;
    const double x_pub = 0.663;

    const double a_pub = brace_term_a(in.params);
    const double b_pub = brace_term_b(in.params, phi_f_pub, phi_t_pub);
    const double gap_brace_pub = 0.5 * (a_pub - b_pub);
    std::optional<double> l_brace_pub;
    if (gap_brace_pub > 0.0) {
        l_brace_pub = 1.0 / gap_brace_pub;
    }

    std::optional<double> l_comp;
    if (pair.has_value()) {
        if (pair->length_scale.has_value()) {
            l_comp = pair->length_scale;
        } else if (l_brace_pub.has_value()) {
            l_comp = l_brace_pub;
            annotations.push_back(
                "gap_bogomilnyi from the recomputed minima is non-positive; the "
                "computed pipeline falls back to the length scale from the "
                "published phi_false/phi_true brace pair");
        }
    }
    std::optional<double> x_comp;
    if (pair.has_value()) {
        x_comp = v1(in.params, pair->phi_false);
    }

    const auto sr_block = [&](double phi,
                              const char* label) -> std::optional<SlowRollReport> {
        try {
            return slow_roll_report(in.params, phi, in.flatness_threshold);
        } catch (const Error& e) {
            annotations.push_back(std::string(label) + " slow-roll block skipped: " +
                                  e.what());
            warning = true;
            return std::nullopt;
        }
    };
    const auto sr_f_pub = sr_block(phi_f_pub, "published phi_false");
    const auto sr_t_pub = sr_block(phi_t_pub, "published phi_true");
    const auto sr_star = sr_block(in.params.phi_star, "phi_star");
    std::optional<SlowRollReport> sr_f_cmp;
    std::optional<SlowRollReport> sr_t_cmp;
    if (pair.has_value()) {
        sr_f_cmp = sr_block(pair->phi_false, "computed phi_false");
        sr_t_cmp = sr_block(pair->phi_true, "computed phi_true");
    }

    const double rho = rho_t_lower_bound(in.params.inflaton_mass, in.params.planck_mass);
    const double s_t = cdl_surface_term(rho);
    const RateResult rate =
        cdl_rate({in.prefactor_a, in.bounce_action_sb, rho});
    const double n_garriga = garriga_density({});
    const double mstar = units::effective_mass();

    const double c_pub = normalization_constant(1.0 / l_pub, l_pub);
    const double t_pub =
        tunneling_amplitude(make_tunnel_inputs(c_pub, c_pub, mstar, x_pub, l_pub));
    std::optional<double> c_cmp;
    std::optional<double> t_cmp;
    if (l_comp.has_value() && x_comp.has_value()) {
        c_cmp = normalization_constant(1.0 / *l_comp, *l_comp);
        t_cmp = tunneling_amplitude(
            make_tunnel_inputs(*c_cmp, *c_cmp, mstar, *x_comp, *l_comp));
    } else {
        annotations.push_back(
            "computed tunneling pipeline unavailable without a classified "
            "vacuum pair and a positive length scale");
        warning = true;
    }

    const auto units_sys = units::default_units();
    const auto masses = units::default_mass_scales();

    JsonWriter w;
    w.begin_object();

    w.begin_object("config");
    w.field("planck_mass", in.params.planck_mass);
    w.field("inflaton_mass", in.params.inflaton_mass);
    w.field("phi_star", in.params.phi_star);
    w.field("cosine_amplitude", in.params.cosine_amplitude);
    w.field("vacuum_offset", in.params.vacuum_offset);
    w.field("heavy_inflaton_warning", in.params.heavy_inflaton());
    w.field("window_lo", in.window_lo);
    w.field("window_hi", in.window_hi);
    w.field("grid_n", in.grid_n);
    w.field("flatness_threshold", in.flatness_threshold);
    w.field("bounce_action_sb", in.bounce_action_sb);
    w.field("prefactor_a", in.prefactor_a);
    w.end_object();

    w.begin_object("units");
    emit_qty(w, "planck_length_m",
             {1.616e-35, "Eq. 22", units_sys.planck_length_m});
    emit_qty(w, "planck_mass_gev",
             {1.22e19, "App. I Eq. 4", units_sys.planck_mass_gev});
    emit_qty(w, "planck_time_s", {std::nullopt, nullptr, units_sys.planck_time_s});
    emit_qty(w, "electron_mass_planck",
             {masses.electron_mass_planck, "App. I Eq. 5", 1.0 / 0.231e20});
    emit_qty(w, "effective_mass_mstar",
             {8.676e-20, "Eq. 26", masses.effective_mass_mstar});
    w.end_object();

    w.begin_object("vacua");
    emit_qty(w, "phi_false",
             {phi_f_pub, "Eq. 10",
              pair ? std::optional<double>(pair->phi_false) : std::nullopt});
    emit_qty(w, "phi_true",
             {phi_t_pub, "Eq. 11",
              pair ? std::optional<double>(pair->phi_true) : std::nullopt});
    emit_qty(w, "gap_potential",
             {std::nullopt, nullptr,
              pair ? std::optional<double>(pair->gap_potential) : std::nullopt});
    emit_qty(w, "gap_bogomilnyi",
             {std::nullopt, nullptr,
              pair ? std::optional<double>(pair->gap_bogomilnyi) : std::nullopt});
    emit_qty(w, "brace_a",
             {std::nullopt, nullptr,
              pair ? std::optional<double>(pair->brace_a) : std::nullopt});
    emit_qty(w, "brace_b",
             {std::nullopt, nullptr,
              pair ? std::optional<double>(pair->brace_b) : std::nullopt});
    emit_qty(w, "length_scale",
             {std::nullopt, nullptr,
              pair ? pair->length_scale : std::nullopt});
    w.begin_object("published_inputs");
    emit_qty(w, "brace_a", {std::nullopt, nullptr, a_pub});
    emit_qty(w, "brace_b", {std::nullopt, nullptr, b_pub});
    emit_qty(w, "gap_bogomilnyi", {0.041, "Eq. 13", gap_brace_pub});
    emit_qty(w, "length_scale", {l_pub, "Sec. II", l_brace_pub});
    w.end_object();
    w.end_object();

    const auto emit_sr = [&](const char* key,
                             const std::optional<SlowRollReport>& r,
                             std::optional<double> d2_pub,
                             std::optional<double> h2_pub, const char* ref) {
        w.begin_object(key);
        if (r.has_value()) {
            w.field("phi", r->phi);
        } else {
            w.field_null("phi");
        }
        emit_qty(w, "d2v_abs",
                 {d2_pub, ref,
                  r ? std::optional<double>(std::abs(r->d2v)) : std::nullopt});
        emit_qty(w, "hubble_sq", {h2_pub, ref, opt(r, &SlowRollReport::hubble_sq)});
        emit_qty(w, "flatness_ratio",
                 {std::nullopt, nullptr, opt(r, &SlowRollReport::flatness_ratio)});
        emit_qty(w, "epsilon", {std::nullopt, nullptr, opt(r, &SlowRollReport::epsilon)});
        emit_qty(w, "eta", {std::nullopt, nullptr, opt(r, &SlowRollReport::eta)});
        if (r.has_value()) {
            w.field("flat_ok", r->flat_ok);
            w.field("pressure_ok", r->pressure_ok);
        } else {
            w.field_null("flat_ok");
            w.field_null("pressure_ok");
        }
        w.end_object();
    };

    w.begin_object("slow_roll");
    emit_sr("at_published_phi_false", sr_f_pub, 0.504, 4.962, "Eq. 30");
    emit_sr("at_published_phi_true", sr_t_pub, 0.575, 5.305, "Eq. 31");
    emit_sr("at_phi_star", sr_star, 0.335, 8.378, "Eq. 32");
    emit_sr("at_computed_phi_false", sr_f_cmp, std::nullopt, std::nullopt, nullptr);
    emit_sr("at_computed_phi_true", sr_t_cmp, std::nullopt, std::nullopt, nullptr);
    w.end_object();

    w.begin_object("inflation");
    emit_qty(w, "phi0_threshold", {3.1, "Eq. 1", phi0_threshold()});
    emit_qty(w, "phi_star_estimate",
             {0.99 * pi, "Eq. 12",
              phi_star_estimate(in.params.inflaton_mass, in.params.planck_mass)});
    emit_qty(w, "universe_size_at_rescaled_time_cm",
             {1e-2, "Eq. 37", std::nullopt});
    w.end_object();

    w.begin_object("nucleation");
    emit_qty(w, "rho_t", {std::nullopt, nullptr, rho});
    emit_qty(w, "s_t", {std::nullopt, nullptr, s_t});
    emit_qty(w, "cdl_rate", {std::nullopt, nullptr, rate.value});
    w.field("cdl_rate_saturated", rate.saturated);
    emit_qty(w, "garriga_n", {std::nullopt, nullptr, n_garriga});
    w.begin_object("pipeline_published");
    w.field("x", x_pub);
    w.field("length_scale", l_pub);
    emit_qty(w, "c1", {std::nullopt, nullptr, c_pub});
    emit_qty(w, "c2", {std::nullopt, nullptr, c_pub});
    emit_qty(w, "t_if", {std::nullopt, nullptr, t_pub});
    emit_qty(w, "t_if_over_garriga_n", {std::nullopt, nullptr, t_pub / n_garriga});
    w.end_object();
    w.begin_object("pipeline_computed");
    emit_qty(w, "x", {x_pub, "Eq. 28", x_comp});
    emit_qty(w, "length_scale", {l_pub, "Sec. II", l_comp});
    emit_qty(w, "c1", {std::nullopt, nullptr, c_cmp});
    emit_qty(w, "c2", {std::nullopt, nullptr, c_cmp});
    emit_qty(w, "t_if", {std::nullopt, nullptr, t_cmp});
    emit_qty(w, "t_if_over_garriga_n",
             {std::nullopt, nullptr,
              t_cmp ? std::optional<double>(*t_cmp / n_garriga) : std::nullopt});
    w.end_object();
    w.end_object();

    w.begin_array("annotations");
    for (const auto& note : annotations) {
        w.element(note);
    }
    w.end_array();

    w.end_object();
    return {w.take(), warning};
}

SweepRow sweep_row(const ReportInputs& in) {
    in.params.validate();
    if (!(in.window_lo < in.window_hi)) {
        throw DomainError("sweep window requires lo < hi");
    }
    const auto points =
        scan_critical_points(in.params, in.window_lo, in.window_hi, in.grid_n);
    SweepRow row;
    try {
        const VacuumPair pair = classify_vacua(points, in.params);
        row.ok = true;
        row.phi_false = pair.phi_false;
        row.phi_true = pair.phi_true;
        row.gap_potential = pair.gap_potential;
        row.gap_bogomilnyi = pair.gap_bogomilnyi;
        row.brace_a = pair.brace_a;
        row.brace_b = pair.brace_b;
        row.length_scale = pair.length_scale;
    } catch (const InsufficientMinima&) {
        row.ok = false;
    }
    return row;
}

bool apply_sweep_param(PotentialParams& params, const std::string& name, double value) {
    if (name == "m") {
        params.inflaton_mass = value;
        return true;
    }
    if (name == "phi_star") {
        params.phi_star = value;
        return true;
    }
    if (name == "cosine_amplitude") {
        params.cosine_amplitude = value;
        return true;
    }
    return false;
}

} // namespace vacuakit
