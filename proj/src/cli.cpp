#include "vacuakit/cli.hpp"

#include "vacuakit/format.hpp"
#include "vacuakit/kernels.hpp"
#include "vacuakit/potential.hpp"
#include "vacuakit/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace vacuakit {

namespace {

//! Command line or config mistakes; mapped to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct RawFlags {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<double> m;
    std::optional<double> phi_star;
    std::optional<double> amplitude;
    std::optional<double> offset;
    std::optional<double> planck_mass;
    std::optional<std::string> window;
    std::optional<std::size_t> grid_n;
    std::optional<double> flatness_threshold;
    std::optional<double> sb;
    std::optional<double> prefactor;
};

struct Options {
    PotentialParams params;
    bool window_explicit = false;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t grid_n = 2001;
    double flatness_threshold = 1.0;
    double sb = 0.0;
    double prefactor = 1.0;
    std::optional<std::string> format;
    std::string out;
};

void add_common(CLI::App* sub, RawFlags& f) {
    sub->add_option("--config", f.config_path, "JSON config file");
    sub->add_option("--out", f.out, "output path (stdout when omitted)");
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--m", f.m, "inflaton mass");
    sub->add_option("--phi-star", f.phi_star, "matching point of the two branches");
    sub->add_option("--amplitude", f.amplitude, "cosine amplitude");
    sub->add_option("--window", f.window, "scan window LO:HI");
    sub->add_option("--grid-n", f.grid_n, "scan grid size");
    sub->add_option("--sb", f.sb, "bounce action");
    sub->add_option("--prefactor", f.prefactor, "rate prefactor");
}

double parse_double(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw UsageError(what + " is not a number: " + text);
    }
    return value;
}

std::pair<double, double> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("window must have the form LO:HI: " + text);
    }
    const double lo = parse_double(text.substr(0, colon), "window low edge");
    const double hi = parse_double(text.substr(colon + 1), "window high edge");
    return {lo, hi};
}

double cfg_number(const nlohmann::json& v, const char* key) {
    if (!v.is_number()) {
        throw UsageError(std::string("config key ") + key + " must be a number");
    }
    return v.get<double>();
}

std::string cfg_string(const nlohmann::json& v, const char* key) {
    if (!v.is_string()) {
        throw UsageError(std::string("config key ") + key + " must be a string");
    }
    return v.get<std::string>();
}

std::size_t cfg_size(const nlohmann::json& v, const char* key) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw UsageError(std::string("config key ") + key + " must be an integer");
    }
    const auto n = v.get<long long>();
    if (n < 0) {
        throw UsageError(std::string("config key ") + key + " must be non-negative");
    }
    return static_cast<std::size_t>(n);
}

//! Fill flags the command line left unset from the config file.
void apply_config(RawFlags& f) {
    std::ifstream is(f.config_path);
    if (!is) {
        throw UsageError("cannot read config file: " + f.config_path);
    }
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception&) {
        throw UsageError("config file is not valid JSON: " + f.config_path);
    }
    if (!j.is_object()) {
        throw UsageError("config root must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "m") {
            if (!f.m) f.m = cfg_number(value, "m");
        } else if (key == "phi_star") {
            if (!f.phi_star) f.phi_star = cfg_number(value, "phi_star");
        } else if (key == "amplitude") {
            if (!f.amplitude) f.amplitude = cfg_number(value, "amplitude");
        } else if (key == "offset") {
            if (!f.offset) f.offset = cfg_number(value, "offset");
        } else if (key == "planck_mass") {
            if (!f.planck_mass) f.planck_mass = cfg_number(value, "planck_mass");
        } else if (key == "window") {
            if (!f.window) f.window = cfg_string(value, "window");
        } else if (key == "grid_n") {
            if (!f.grid_n) f.grid_n = cfg_size(value, "grid_n");
        } else if (key == "flatness_threshold") {
            if (!f.flatness_threshold) {
                f.flatness_threshold = cfg_number(value, "flatness_threshold");
            }
        } else if (key == "sb") {
            if (!f.sb) f.sb = cfg_number(value, "sb");
        } else if (key == "prefactor") {
            if (!f.prefactor) f.prefactor = cfg_number(value, "prefactor");
        } else if (key == "format") {
            const std::string fmt = cfg_string(value, "format");
            if (fmt != "csv" && fmt != "json") {
                throw UsageError("config key format must be csv or json");
            }
            if (!f.format) f.format = fmt;
        } else if (key == "out") {
            if (!f.out) f.out = cfg_string(value, "out");
        } else {
            throw UsageError("unknown config key: " + key);
        }
    }
}

Options resolve(RawFlags& f) {
    if (!f.config_path.empty()) {
        apply_config(f);
    }
    Options o;
    o.params = default_params();
    if (f.planck_mass) o.params.planck_mass = *f.planck_mass;
    if (f.m) o.params.inflaton_mass = *f.m;
    if (f.phi_star) o.params.phi_star = *f.phi_star;
    if (f.amplitude) o.params.cosine_amplitude = *f.amplitude;
    if (f.offset) o.params.vacuum_offset = *f.offset;
    if (f.window) {
        const auto [lo, hi] = parse_window(*f.window);
        o.window_explicit = true;
        o.window_lo = lo;
        o.window_hi = hi;
    } else {
        default_window(o.params, o.window_lo, o.window_hi);
    }
    if (f.grid_n) o.grid_n = *f.grid_n;
    if (f.flatness_threshold) o.flatness_threshold = *f.flatness_threshold;
    if (f.sb) o.sb = *f.sb;
    if (f.prefactor) o.prefactor = *f.prefactor;
    o.format = f.format;
    if (f.out) o.out = *f.out;
    return o;
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) {
        throw Error("cannot open output file: " + out);
    }
    os << text;
    os.flush();
    if (!os) {
        throw Error("failed writing output file: " + out);
    }
}

int cmd_scan(const Options& o) {
    o.params.validate();
    if (!(o.window_lo < o.window_hi)) {
        throw DomainError("scan window requires lo < hi");
    }
    if (o.grid_n < 2) {
        throw DomainError("scan grid needs at least 2 points");
    }
    const auto& p = o.params;
    const auto vs = kernels::map_uniform(o.window_lo, o.window_hi, o.grid_n,
                                         [&](double phi) { return v1(p, phi); });
    const auto d1s = kernels::map_uniform(o.window_lo, o.window_hi, o.grid_n,
                                          [&](double phi) { return dv1(p, phi); });
    const auto d2s = kernels::map_uniform(o.window_lo, o.window_hi, o.grid_n,
                                          [&](double phi) { return d2v1(p, phi); });

    std::string text;
    const std::string fmt = o.format.value_or("csv");
    if (fmt == "csv") {
        text = "phi,v1,dv1,d2v1\n";
        for (std::size_t i = 0; i < o.grid_n; ++i) {
            const double phi = kernels::grid_node(o.window_lo, o.window_hi, o.grid_n, i);
            text += format_g17(phi) + ',' + format_g17(vs[i]) + ',' +
                    format_g17(d1s[i]) + ',' + format_g17(d2s[i]) + '\n';
        }
    } else {
        text = "[\n";
        for (std::size_t i = 0; i < o.grid_n; ++i) {
            const double phi = kernels::grid_node(o.window_lo, o.window_hi, o.grid_n, i);
            text += "  {\"phi\": " + format_g17(phi) + ", \"v1\": " + format_g17(vs[i]) +
                    ", \"dv1\": " + format_g17(d1s[i]) + ", \"d2v1\": " +
                    format_g17(d2s[i]) + '}';
            text += i + 1 < o.grid_n ? ",\n" : "\n";
        }
        text += "]\n";
    }
    write_output(o.out, text);
    return 0;
}

int cmd_report(const Options& o) {
    if (o.format.has_value() && *o.format == "csv") {
        throw UsageError("the report supports only JSON output");
    }
    ReportInputs in;
    in.params = o.params;
    in.window_lo = o.window_lo;
    in.window_hi = o.window_hi;
    in.grid_n = o.grid_n;
    in.flatness_threshold = o.flatness_threshold;
    in.bounce_action_sb = o.sb;
    in.prefactor_a = o.prefactor;
    const ReportResult result = build_report(in);
    write_output(o.out, result.json);
    if (result.warning) {
        std::fprintf(stderr, "warning: report degraded, see its annotations\n");
    }
    return 0;
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::size_t end = comma == std::string::npos ? list.size() : comma;
        values.push_back(parse_double(list.substr(start, end - start), "sweep value"));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (values.empty()) {
        throw UsageError("sweep needs at least one value");
    }
    return values;
}

int cmd_sweep(const Options& o, const std::string& param, const std::string& list) {
    {
        PotentialParams probe = o.params;
        if (!apply_sweep_param(probe, param, probe.inflaton_mass)) {
            throw UsageError("unknown sweep parameter: " + param +
                             " (expected m, phi_star or cosine_amplitude)");
        }
    }
    const std::vector<double> values = parse_values(list);

    std::vector<SweepRow> rows(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ReportInputs in;
        in.params = o.params;
        apply_sweep_param(in.params, param, values[i]);
        if (o.window_explicit) {
            in.window_lo = o.window_lo;
            in.window_hi = o.window_hi;
        } else {
            default_window(in.params, in.window_lo, in.window_hi);
        }
        in.grid_n = o.grid_n;
        rows[i] = sweep_row(in);
    }

    std::string text;
    const std::string fmt = o.format.value_or("csv");
    if (fmt == "csv") {
        text = "param,value,phi_false,phi_true,gap_potential,gap_bogomilnyi,"
               "brace_a,brace_b,length_scale\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            text += param + ',' + format_g17(values[i]) + ',';
            if (r.ok) {
                text += format_g17(r.phi_false) + ',' + format_g17(r.phi_true) + ',' +
                        format_g17(r.gap_potential) + ',' +
                        format_g17(r.gap_bogomilnyi) + ',' + format_g17(r.brace_a) +
                        ',' + format_g17(r.brace_b) + ',';
                if (r.length_scale) {
                    text += format_g17(*r.length_scale);
                }
            } else {
                text += ",,,,,,";
            }
            text += '\n';
        }
    } else {
        text = "{\n  \"param\": \"" + param + "\",\n  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            text += "    {\"value\": " + format_g17(values[i]) +
                    ", \"ok\": " + (r.ok ? "true" : "false");
            const auto num = [&](const char* key, double v, bool present) {
                text += std::string(", \"") + key + "\": " +
                        (present ? format_g17(v) : std::string("null"));
            };
            num("phi_false", r.phi_false, r.ok);
            num("phi_true", r.phi_true, r.ok);
            num("gap_potential", r.gap_potential, r.ok);
            num("gap_bogomilnyi", r.gap_bogomilnyi, r.ok);
            num("brace_a", r.brace_a, r.ok);
            num("brace_b", r.brace_b, r.ok);
            num("length_scale", r.length_scale.value_or(0.0),
                r.ok && r.length_scale.has_value());
            text += '}';
            text += i + 1 < rows.size() ? ",\n" : "\n";
        }
        text += "  ]\n}\n";
    }
    write_output(o.out, text);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"vacuum landscape toolkit"};
    app.require_subcommand(1);

    RawFlags scan_flags;
    RawFlags report_flags;
    RawFlags sweep_flags;
    CLI::App* scan = app.add_subcommand("scan", "tabulate v1 and its derivatives");
    add_common(scan, scan_flags);
    CLI::App* report =
        app.add_subcommand("report", "reconciliation report against published values");
    add_common(report, report_flags);
    CLI::App* sweep =
        app.add_subcommand("sweep", "vacua summary across one parameter");
    add_common(sweep, sweep_flags);
    std::string sweep_param;
    std::string sweep_values;
    sweep->add_option("param", sweep_param, "m, phi_star or cosine_amplitude")
        ->required();
    sweep->add_option("--values", sweep_values, "comma separated values")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (scan->parsed()) {
            return cmd_scan(resolve(scan_flags));
        }
        if (report->parsed()) {
            return cmd_report(resolve(report_flags));
        }
        return cmd_sweep(resolve(sweep_flags), sweep_param, sweep_values);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace vacuakit
