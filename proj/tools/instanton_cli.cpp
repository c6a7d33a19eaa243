// Command-line front end: single evaluations, L/T sweeps, and the
// validation suite for the double-well tunneling pipeline.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "CLI11.hpp"

#include "instanton/model.hpp"
#include "instanton/propagator.hpp"
#include "instanton/report_json.hpp"
#include "instanton/validate.hpp"

namespace {

using instanton::DoubleWellParams;
using nlohmann::json;

struct SweepRange {
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
    std::string spacing = "linear";
};

struct RunConfig {
    DoubleWellParams params;
    std::string mode = "kink";
    std::optional<double> L;
    std::optional<double> temperature;
    std::optional<SweepRange> sweep;
    int grid = 4096;
    double kB = 1.0;
    int workers = 4;
    std::string format = "csv";
    std::string out;
};

struct SweepRow {
    double L = 0.0;
    instanton::TunnelingReport report;
    bool ok = false;
    std::string status = "ok";
};

const char* kColumns[] = {"L",      "T",          "E",
                          "kappa",  "s_squared",  "action",
                          "zero_mode_norm_sq",    "det_ratio",
                          "omega_tunnel",         "amplitude"};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> row_values(const SweepRow& r) {
    const auto& t = r.report;
    return {t.L,      t.temperature,       t.E,        t.kappa,
            t.s_squared, t.action,         t.zero_mode_norm_sq,
            t.det_ratio, t.omega_tunnel,   t.amplitude};
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    in >> j;
    if (j.contains("params")) {
        const json& p = j["params"];
        cfg.params.mass = p.value("mass", cfg.params.mass);
        cfg.params.omega = p.value("omega", cfg.params.omega);
        cfg.params.delta = p.value("delta", cfg.params.delta);
        cfg.params.hbar = p.value("hbar", cfg.params.hbar);
    }
    cfg.mode = j.value("mode", cfg.mode);
    if (j.contains("L")) cfg.L = j["L"].get<double>();
    if (j.contains("temperature"))
        cfg.temperature = j["temperature"].get<double>();
    if (j.contains("sweep")) {
        SweepRange s;
        s.min = j["sweep"].at("min").get<double>();
        s.max = j["sweep"].at("max").get<double>();
        s.steps = j["sweep"].at("steps").get<int>();
        s.spacing = j["sweep"].value("spacing", std::string("linear"));
        cfg.sweep = s;
    }
    cfg.grid = j.value("grid", cfg.grid);
    cfg.kB = j.value("kB", cfg.kB);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.format = j.value("format", cfg.format);
    cfg.out = j.value("out", cfg.out);
}

void validate_config(const RunConfig& cfg) {
    cfg.params.validate();
    if (cfg.mode != "kink" && cfg.mode != "finite" && cfg.mode != "sweep" &&
        cfg.mode != "validate")
        throw std::runtime_error("mode must be kink|finite|sweep|validate");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::runtime_error("format must be csv|json");
    if (cfg.L && cfg.temperature)
        throw std::runtime_error(
            "specify exactly one of L / temperature (Matsubara map relates "
            "them)");
    if (cfg.mode == "sweep") {
        if (!cfg.sweep) throw std::runtime_error("sweep mode needs a range");
        if (!(cfg.sweep->min < cfg.sweep->max) || cfg.sweep->steps < 2)
            throw std::runtime_error("sweep range needs min < max, steps >= 2");
        if (cfg.sweep->spacing != "linear" && cfg.sweep->spacing != "log")
            throw std::runtime_error("sweep spacing must be linear|log");
    }
    if (cfg.mode == "finite" && !cfg.L && !cfg.temperature)
        throw std::runtime_error("finite mode needs --L or --temperature");
    if (cfg.grid < 64) throw std::runtime_error("grid must be >= 64");
    if (cfg.workers < 1) throw std::runtime_error("workers must be >= 1");
}

double resolved_L(const RunConfig& cfg, double fallback) {
    if (cfg.L) return *cfg.L;
    if (cfg.temperature)
        return instanton::temperature_to_size(cfg.params, *cfg.temperature,
                                              cfg.kB);
    return fallback;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out);
        if (!out)
            throw std::runtime_error("cannot write output: " + cfg.out);
        out << text;
    }
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < std::size(kColumns); ++i)
        os << kColumns[i] << ',';
    os << "status\n";
    for (const SweepRow& r : rows) {
        for (double v : row_values(r)) os << fmt17(v) << ',';
        os << r.status << '\n';
    }
    return os.str();
}

std::string rows_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& r : rows) {
        json o;
        const auto vals = row_values(r);
        for (std::size_t i = 0; i < std::size(kColumns); ++i)
            o[kColumns[i]] = vals[i];
        o["status"] = r.status;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

SweepRow evaluate_point(const RunConfig& cfg, double L) {
    SweepRow row;
    row.L = L;
    instanton::PipelineOptions opt;
    opt.grid_points = cfg.grid;
    opt.kB = cfg.kB;
    try {
        row.report = instanton::amplitude_finite(cfg.params, L, opt);
        row.ok = true;
    } catch (const std::exception& e) {
        row.report.L = L;
        row.report.temperature = cfg.params.hbar / (cfg.kB * L);
        row.status = e.what();
    }
    return row;
}

int run_sweep(const RunConfig& cfg) {
    const SweepRange& s = *cfg.sweep;
    std::vector<double> Ls(s.steps);
    for (int i = 0; i < s.steps; ++i) {
        const double t = static_cast<double>(i) / (s.steps - 1);
        Ls[i] = s.spacing == "log"
                    ? s.min * std::pow(s.max / s.min, t)
                    : s.min + t * (s.max - s.min);
    }
    // bounded pool of async workers; rows keep the L ordering
    std::vector<SweepRow> rows(Ls.size());
    std::vector<std::future<SweepRow>> inflight;
    std::size_t next = 0, done = 0;
    std::vector<std::size_t> slot;
    while (done < Ls.size()) {
        while (inflight.size() < static_cast<std::size_t>(cfg.workers) &&
               next < Ls.size()) {
            inflight.push_back(std::async(std::launch::async, evaluate_point,
                                          std::cref(cfg), Ls[next]));
            slot.push_back(next);
            ++next;
        }
        rows[slot.front()] = inflight.front().get();
        inflight.erase(inflight.begin());
        slot.erase(slot.begin());
        ++done;
    }
    emit(cfg, cfg.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows));
    return 0;
}

int run_single(const RunConfig& cfg) {
    if (cfg.mode == "kink") {
        const double L = resolved_L(cfg, 30.0 / cfg.params.omega);
        const instanton::TunnelingReport rep =
            instanton::kink_report(cfg.params, L, cfg.kB);
        if (cfg.format == "json") {
            emit(cfg, instanton::to_json(rep).dump(2) + "\n");
        } else {
            SweepRow row;
            row.L = L;
            row.report = rep;
            row.ok = true;
            emit(cfg, rows_to_csv({row}));
        }
        return 0;
    }
    const double L = resolved_L(cfg, 0.0);
    const SweepRow row = evaluate_point(cfg, L);
    if (!row.ok) {
        std::cerr << "numerical failure: " << row.status << "\n";
        return 2;
    }
    emit(cfg, cfg.format == "json"
                  ? instanton::to_json(row.report).dump(2) + "\n"
                  : rows_to_csv({row}));
    return 0;
}

int run_validate(const RunConfig& cfg) {
    (void)cfg;
    bool all = true;
    for (const instanton::CheckResult& c :
         instanton::run_acceptance_checks()) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " — "
                  << c.detail << "\n";
        all = all && c.passed;
    }
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiclassical tunneling in the phi^4 double well: "
                 "elliptic backgrounds, actions, fluctuation determinants "
                 "and tunneling amplitudes"};
    std::string config_path;
    app.add_option("config", config_path, "JSON config file");
    std::optional<std::string> mode, format, out, spacing;
    std::optional<double> mass, omega, delta, hbar, L, temperature, kB;
    std::optional<int> grid, workers;
    std::optional<std::vector<double>> sweep_spec;
    app.add_option("--mode", mode, "kink|finite|sweep|validate");
    app.add_option("--mass", mass, "particle mass M");
    app.add_option("--omega", omega, "well frequency");
    app.add_option("--delta", delta, "quartic constant");
    app.add_option("--hbar", hbar, "action quantum");
    app.add_option("--L", L, "imaginary-time size");
    app.add_option("--temperature", temperature, "temperature (maps to L)");
    app.add_option("--kB", kB, "Boltzmann constant");
    app.add_option("--sweep", sweep_spec, "min,max,steps")
        ->delimiter(',')
        ->expected(1, 3);
    app.add_option("--sweep-spacing", spacing, "linear|log");
    app.add_option("--grid", grid, "fluctuation grid points");
    app.add_option("--workers", workers, "concurrent sweep workers");
    app.add_option("--format", format, "csv|json");
    app.add_option("--out", out, "output path (default stdout)");
    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (mode) cfg.mode = *mode;
        if (mass) cfg.params.mass = *mass;
        if (omega) cfg.params.omega = *omega;
        if (delta) cfg.params.delta = *delta;
        if (hbar) cfg.params.hbar = *hbar;
        if (L) cfg.L = *L;
        if (temperature) cfg.temperature = *temperature;
        if (kB) cfg.kB = *kB;
        if (grid) cfg.grid = *grid;
        if (workers) cfg.workers = *workers;
        if (format) cfg.format = *format;
        if (out) cfg.out = *out;
        if (spacing) {
            if (!cfg.sweep) cfg.sweep = SweepRange{};
            cfg.sweep->spacing = *spacing;
        }
        if (sweep_spec) {
            if (sweep_spec->size() != 3)
                throw std::runtime_error("--sweep needs min,max,steps");
            if (!cfg.sweep) cfg.sweep = SweepRange{};
            cfg.sweep->min = (*sweep_spec)[0];
            cfg.sweep->max = (*sweep_spec)[1];
            cfg.sweep->steps = static_cast<int>((*sweep_spec)[2]);
        }
        validate_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cfg.mode == "validate") return run_validate(cfg);
        if (cfg.mode == "sweep") return run_sweep(cfg);
        return run_single(cfg);
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
