#include <doctest.h>

#include <json.hpp>

#include "vacuakit/potential.hpp"
#include "vacuakit/report.hpp"
#include "vacuakit/vacua.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace vacuakit;

namespace {

struct RunResult {
    int code;
    std::string out;
};

//! Run the built binary with `args`, capturing stdout and the exit code.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string path = "/tmp/vacuakit_cli_" + std::to_string(::getpid()) + "_" +
                             std::to_string(counter++) + ".out";
    std::string cmd = env_prefix;
    if (!cmd.empty()) {
        cmd += ' ';
    }
    cmd += std::string(VACUAKIT_CLI_BIN) + " " + args + " > " + path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = status == -1 ? -1 : WEXITSTATUS(status);
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    r.out = buf.str();
    std::remove(path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream is(line);
    std::string cell;
    while (std::getline(is, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.push_back("");
    }
    return cells;
}

} // namespace

TEST_CASE("scan emits the CSV contract and round-trips exactly") {
    const auto r = run("scan --window 0:1 --grid-n 11");
    REQUIRE(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "phi,v1,dv1,d2v1");
    const auto p = default_params();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 4);
        const double phi = std::stod(cells[0]);
        CHECK(std::stod(cells[1]) == v1(p, phi));
        CHECK(std::stod(cells[2]) == dv1(p, phi));
        CHECK(std::stod(cells[3]) == d2v1(p, phi));
    }
    CHECK(std::stod(split_csv(rows[1])[0]) == 0.0);
    CHECK(std::stod(split_csv(rows[11])[0]) == 1.0);
}

TEST_CASE("scan emits parseable JSON rows") {
    const auto r = run("scan --window 0:1 --grid-n 7 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 7);
    const auto p = default_params();
    for (const auto& row : j) {
        const double phi = row.at("phi").get<double>();
        CHECK(row.at("v1").get<double>() == v1(p, phi));
        CHECK(row.at("dv1").get<double>() == dv1(p, phi));
        CHECK(row.at("d2v1").get<double>() == d2v1(p, phi));
    }
}

TEST_CASE("scan of the pure quadratic has constant curvature") {
    const auto r = run("scan --amplitude 0 --window 2:4 --grid-n 5");
    REQUIRE(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 6);
    const std::string d2 = split_csv(rows[1])[3];
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(split_csv(rows[i])[3] == d2);
    }
}

TEST_CASE("report carries published values, flags, and both pipelines") {
    const auto r = run("report");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);

    CHECK(j.at("vacua").at("phi_false").at("paper_value").get<double>() == 0.5472);
    CHECK(j.at("vacua").at("phi_true").at("computed_value").get<double>() ==
          doctest::Approx(0.83251451549200159).epsilon(1e-9));
    CHECK(j.at("vacua").at("length_scale").at("computed_value").is_null());
    CHECK(j.at("vacua").at("published_inputs").at("gap_bogomilnyi")
              .at("discrepancy_flag").get<bool>() == true);
    CHECK(j.at("vacua").at("published_inputs").at("gap_bogomilnyi")
              .at("computed_value").get<double>() ==
          doctest::Approx(0.04978105).epsilon(1e-10));

    const auto& pub = j.at("nucleation").at("pipeline_published");
    CHECK(pub.at("t_if").at("computed_value").get<double>() ==
          doctest::Approx(11667186862.656571).epsilon(1e-9));
    CHECK(pub.at("c1").at("computed_value").get<double>() ==
          pub.at("c2").at("computed_value").get<double>());
    const auto& cmp = j.at("nucleation").at("pipeline_computed");
    CHECK(cmp.at("t_if").at("computed_value").get<double>() ==
          doctest::Approx(1027930747716.3366).epsilon(1e-9));
    CHECK(cmp.at("length_scale").at("computed_value").get<double>() ==
          doctest::Approx(20.087965199609088).epsilon(1e-9));

    CHECK(j.at("slow_roll").at("at_phi_star").at("flatness_ratio")
              .at("computed_value").get<double>() ==
          doctest::Approx(0.040282677704287707).epsilon(1e-10));
    CHECK(j.at("annotations").size() >= 6);
    CHECK(j.at("units").at("electron_mass_planck").at("discrepancy_flag").get<bool>());
}

TEST_CASE("report output is byte-identical across runs and thread counts") {
    const auto a = run("report");
    const auto b = run("report");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    const auto t1 = run("report", "VACUAKIT_THREADS=1");
    const auto t3 = run("report", "VACUAKIT_THREADS=3");
    REQUIRE(t1.code == 0);
    REQUIRE(t3.code == 0);
    CHECK(t1.out == t3.out);
    CHECK(t1.out == a.out);
}

TEST_CASE("report degrades gracefully on a minima-free window") {
    const auto r = run("report --window 20:21");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("vacua").at("phi_false").at("computed_value").is_null());
    bool noted = false;
    for (const auto& note : j.at("annotations")) {
        if (note.get<std::string>().find("InsufficientMinima") != std::string::npos) {
            noted = true;
        }
    }
    CHECK(noted);
    CHECK(j.at("nucleation").at("pipeline_published").at("t_if")
              .at("computed_value").is_number());
    CHECK(j.at("nucleation").at("pipeline_computed").at("t_if")
              .at("computed_value").is_null());
}

TEST_CASE("report honours the bounce action and prefactor flags") {
    const auto r = run("report --sb 2 --prefactor 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const double s_t = j.at("nucleation").at("s_t").at("computed_value").get<double>();
    const double rate =
        j.at("nucleation").at("cdl_rate").at("computed_value").get<double>();
    CHECK(rate == doctest::Approx(3.0 * std::exp(-2.0 + s_t)).epsilon(1e-12));
}

TEST_CASE("exit codes distinguish computation errors from usage errors") {
    CHECK(run("report --window 5:1").code == 1);
    CHECK(run("sweep bogus --values 1").code == 2);
    CHECK(run("scan --no-such-flag").code == 2);
    CHECK(run("report --format csv").code == 2);
    CHECK(run("scan --format yaml").code == 2);
    CHECK(run("sweep m").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("scan --out /nonexistent-dir/x.csv").code == 1);
}

TEST_CASE("sweep of a single point matches a direct classification") {
    const auto r = run("sweep m --values 0.441");
    REQUIRE(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] ==
          "param,value,phi_false,phi_true,gap_potential,gap_bogomilnyi,"
          "brace_a,brace_b,length_scale");
    const auto cells = split_csv(rows[1]);
    REQUIRE(cells.size() == 9);
    CHECK(cells[0] == "m");

    const auto p = default_params();
    double lo = 0.0;
    double hi = 0.0;
    default_window(p, lo, hi);
    const auto pair = classify_vacua(scan_critical_points(p, lo, hi, 2001), p);
    CHECK(std::stod(cells[2]) == doctest::Approx(pair.phi_false).epsilon(1e-12));
    CHECK(std::stod(cells[3]) == doctest::Approx(pair.phi_true).epsilon(1e-12));
    CHECK(std::stod(cells[6]) == doctest::Approx(pair.brace_a).epsilon(1e-14));
    CHECK(cells[8].empty());
}

TEST_CASE("sweep walks the parameter and keeps brace_a monotone in m") {
    std::string values;
    std::vector<double> ms;
    for (int i = 0; i < 32; ++i) {
        const double m = 0.25 * std::pow(0.7 / 0.25, i / 31.0);
        ms.push_back(m);
        if (!values.empty()) {
            values += ',';
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", m);
        values += buf;
    }
    const auto r = run("sweep m --values " + values);
    REQUIRE(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 33);
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 9);
        REQUIRE_FALSE(cells[6].empty());
        const double brace_a = std::stod(cells[6]);
        CHECK(brace_a > prev);
        prev = brace_a;
        CHECK(std::stod(cells[1]) == doctest::Approx(ms[i - 1]).epsilon(1e-9));
    }
}

TEST_CASE("sweep emits JSON rows when asked") {
    const auto r = run("sweep phi_star --values 2.9,3.1,3.3 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("param").get<std::string>() == "phi_star");
    REQUIRE(j.at("rows").size() == 3);
    for (const auto& row : j.at("rows")) {
        CHECK(row.at("ok").get<bool>());
        CHECK(row.at("phi_false").is_number());
    }
}

TEST_CASE("sweep is byte-identical across thread counts") {
    const std::string args = "sweep m --values 0.3,0.35,0.4,0.45,0.5";
    const auto t1 = run(args, "VACUAKIT_THREADS=1");
    const auto t3 = run(args, "VACUAKIT_THREADS=3");
    REQUIRE(t1.code == 0);
    CHECK(t1.out == t3.out);
}

TEST_CASE("config files feed defaults that flags override") {
    const std::string cfg = "/tmp/vacuakit_cfg_" + std::to_string(::getpid()) + ".json";
    {
        std::ofstream os(cfg);
        os << "{\"m\": 0.5, \"window\": \"0:6.28\", \"grid_n\": 11, "
              "\"format\": \"json\"}";
    }
    const auto r = run("scan --config " + cfg);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 11);
    PotentialParams p = default_params();
    p.inflaton_mass = 0.5;
    CHECK(j[0].at("phi").get<double>() == 0.0);
    CHECK(j[0].at("d2v1").get<double>() == d2v1(p, 0.0));

    const auto overridden = run("scan --config " + cfg + " --grid-n 5");
    REQUIRE(overridden.code == 0);
    CHECK(nlohmann::json::parse(overridden.out).size() == 5);

    {
        std::ofstream os(cfg);
        os << "{\"mass\": 0.5}";
    }
    CHECK(run("scan --config " + cfg).code == 2);
    {
        std::ofstream os(cfg);
        os << "{not json";
    }
    CHECK(run("scan --config " + cfg).code == 2);
    CHECK(run("scan --config /tmp/vacuakit_missing_cfg.json").code == 2);
    std::remove(cfg.c_str());
}

TEST_CASE("out flag writes the same bytes a pipe would receive") {
    const std::string path =
        "/tmp/vacuakit_out_" + std::to_string(::getpid()) + ".csv";
    const auto direct = run("scan --window 0:1 --grid-n 6");
    const auto filed = run("scan --window 0:1 --grid-n 6 --out " + path);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());
}
