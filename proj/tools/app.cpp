#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrma/qrma.hpp"

namespace qrma::app {

namespace {

const std::vector<std::string> kCommands = {"spectrum", "ground", "photon", "dynamics", "wspec", "crossings"};

ModelParams family(const RunConfig& cfg) {
    return ModelParams{cfg.big_delta, cfg.osc_delta, cfg.f_min};
}

Truncation truncation(const RunConfig& cfg) {
    if (cfg.n_max == "auto") return Truncation::automatic();
    return Truncation::fixed(static_cast<std::size_t>(std::stoul(cfg.n_max)));
}

std::size_t dynamics_basis(const RunConfig& cfg) {
    return cfg.n_max == "auto" ? 0 : static_cast<std::size_t>(std::stoul(cfg.n_max));
}

Window window(const RunConfig& cfg) { return cfg.window == "hann" ? Window::hann : Window::none; }

std::vector<double> couplings(const RunConfig& cfg) {
    return linear_grid(cfg.f_min, cfg.f_max, cfg.f_steps);
}

std::string cell(double x) { return format_number(x); }
std::string cell(long long x) { return std::to_string(x); }

Table spectrum_table(const RunConfig& cfg) {
    Table t;
    t.header = {"f", "parity", "level", "E_exact", "E_rwar"};
    for (const SpectrumRow& r : sweep(family(cfg), couplings(cfg), cfg.levels, truncation(cfg))) {
        t.rows.push_back({cell(r.f), cell(static_cast<long long>(r.parity.value())),
                          cell(static_cast<long long>(r.level)), cell(r.e_exact), cell(r.e_rwar)});
        t.converged = t.converged && r.converged;
    }
    return t;
}

Table ground_table(const RunConfig& cfg) {
    Table t;
    t.header = {"f", "E_exact", "parity", "E_rwar"};
    for (double f : couplings(cfg)) {
        ModelParams p = family(cfg);
        p.coupling = f;
        const GroundState gs = ground_state(p, truncation(cfg));
        t.rows.push_back({cell(f), cell(gs.energy), cell(static_cast<long long>(gs.parity.value())),
                          cell(rwar_ground(p))});
        t.converged = t.converged && gs.converged;
    }
    return t;
}

Table photon_table(const RunConfig& cfg) {
    Table t;
    t.header = {"f", "n_exact", "n_rwa"};
    for (double f : couplings(cfg)) {
        ModelParams p = family(cfg);
        p.coupling = f;
        const GroundState gs = ground_state(p, truncation(cfg));
        const double omega = derive_params(p).omega;
        t.rows.push_back({cell(f), cell(photon_number_exact(gs.vector, omega)), cell(rwa_photon_number(p))});
        t.converged = t.converged && gs.converged;
    }
    return t;
}

struct InversionPair {
    TimeSeries exact;
    TimeSeries rwa;
};

InversionPair inversions(const RunConfig& cfg, double f) {
    ModelParams p = family(cfg);
    p.coupling = f;
    const InitialCondition ic{cfg.epsilon};
    const TimeGrid grid{cfg.t_max, cfg.samples};
    const Projection proj = project_initial(p, ic, dynamics_basis(cfg));
    return {evolve_inversion(proj, grid), rwa_time_series(p, ic, grid)};
}

Table dynamics_table(const RunConfig& cfg) {
    Table t;
    t.header = {"t", "w_exact", "w_rwa"};
    const InversionPair w = inversions(cfg, cfg.f_min);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        t.rows.push_back({cell(w.exact.grid.time(i)), cell(w.exact.w[i]), cell(w.rwa.w[i])});
    }
    return t;
}

Table wspec_table(const RunConfig& cfg) {
    Table t;
    if (!cfg.long_format) {
        t.header = {"omega", "mag_exact", "mag_rwa"};
        const InversionPair w = inversions(cfg, cfg.f_min);
        const FrequencySpectrum exact = fourier_spectrum(w.exact, window(cfg));
        const FrequencySpectrum rwa = fourier_spectrum(w.rwa, window(cfg));
        for (std::size_t k = 0; k < exact.freqs.size(); ++k) {
            t.rows.push_back({cell(exact.freqs[k]), cell(exact.mags[k]), cell(rwa.mags[k])});
        }
        return t;
    }
    t.header = {"f", "omega", "mag"};
    for (double f : couplings(cfg)) {
        const InversionPair w = inversions(cfg, f);
        const FrequencySpectrum s = fourier_spectrum(cfg.series == "rwa" ? w.rwa : w.exact, window(cfg));
        for (std::size_t k = 0; k < s.freqs.size(); ++k) {
            t.rows.push_back({cell(f), cell(s.freqs[k]), cell(s.mags[k])});
        }
    }
    return t;
}

Table crossings_table(const RunConfig& cfg) {
    Table t;
    t.header = {"n", "f_star_rwa", "f_star_exact"};
    if (!(cfg.f_max > cfg.f_min)) return t;
    const int grid = static_cast<int>(std::max<std::size_t>(cfg.f_steps, 2));
    for (std::size_t n = 0; n < cfg.levels; ++n) {
        const int level = static_cast<int>(n);
        const auto rwa = find_rwar_crossings(family(cfg), level, cfg.f_min, cfg.f_max, grid);
        const auto exact = find_exact_crossings(family(cfg), level, cfg.f_min, cfg.f_max, grid, truncation(cfg));
        if (rwa.empty() && exact.empty()) continue;
        t.rows.push_back({cell(static_cast<long long>(n)), rwa.empty() ? "" : cell(rwa.front()),
                          exact.empty() ? "" : cell(exact.front())});
    }
    return t;
}

template <typename T>
void take(const nlohmann::json& j, const char* dashed, T& field) {
    std::string underscored = dashed;
    std::replace(underscored.begin(), underscored.end(), '-', '_');
    for (const std::string& key : {std::string(dashed), underscored}) {
        if (j.contains(key)) {
            field = j.at(key).get<T>();
            return;
        }
    }
}

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(json_text);
        if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
        take(j, "command", cfg.command);
        take(j, "big-delta", cfg.big_delta);
        take(j, "osc-delta", cfg.osc_delta);
        take(j, "f-min", cfg.f_min);
        take(j, "f-max", cfg.f_max);
        take(j, "f-steps", cfg.f_steps);
        take(j, "levels", cfg.levels);
        if (j.contains("n-max") || j.contains("n_max")) {
            const auto& v = j.contains("n-max") ? j.at("n-max") : j.at("n_max");
            cfg.n_max = v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::size_t>());
        }
        take(j, "epsilon", cfg.epsilon);
        take(j, "t-max", cfg.t_max);
        take(j, "samples", cfg.samples);
        take(j, "window", cfg.window);
        take(j, "format", cfg.format);
        take(j, "out", cfg.out);
        take(j, "long", cfg.long_format);
        take(j, "series", cfg.series);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid config file: ") + e.what());
    }
}

void validate(const RunConfig& cfg) {
    if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("--format must be csv or json");
    if (cfg.window != "none" && cfg.window != "hann") throw ConfigError("--window must be none or hann");
    if (cfg.series != "exact" && cfg.series != "rwa") throw ConfigError("--series must be exact or rwa");
    if (cfg.n_max != "auto") {
        const bool digits = !cfg.n_max.empty() &&
                            std::all_of(cfg.n_max.begin(), cfg.n_max.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (!digits || std::stoul(cfg.n_max) < 2) throw ConfigError("--n-max must be 'auto' or an integer >= 2");
    }
    if (!std::isfinite(cfg.f_min) || !std::isfinite(cfg.f_max) || cfg.f_min < 0.0 || cfg.f_max < cfg.f_min) {
        throw ConfigError("coupling range must satisfy 0 <= f-min <= f-max");
    }
    if (cfg.f_steps == 0) throw ConfigError("--f-steps must be positive");
    if (cfg.levels == 0) throw ConfigError("--levels must be positive");
    try {
        qrma::validate(ModelParams{cfg.big_delta, cfg.osc_delta, cfg.f_min});
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    const bool timed = cfg.command == "dynamics" || cfg.command == "wspec";
    if (timed) {
        if (!(cfg.epsilon >= 0.0) || !std::isfinite(cfg.epsilon)) throw ConfigError("--epsilon must be >= 0");
        if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) throw ConfigError("--t-max must be positive");
        if (cfg.samples < 4) throw ConfigError("--samples must be at least 4");
        const bool single = cfg.command == "dynamics" || !cfg.long_format;
        if (single && cfg.f_steps != 1 && cfg.f_max != cfg.f_min) {
            throw ConfigError(cfg.command + " takes a single coupling: use --f or --f-steps 1" +
                              (cfg.command == "wspec" ? " (or --long for a sweep)" : ""));
        }
    }
}

Table execute(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.command == "spectrum") return spectrum_table(cfg);
    if (cfg.command == "ground") return ground_table(cfg);
    if (cfg.command == "photon") return photon_table(cfg);
    if (cfg.command == "dynamics") return dynamics_table(cfg);
    if (cfg.command == "wspec") return wspec_table(cfg);
    return crossings_table(cfg);
}

std::string render(const Table& table, const std::string& format) {
    std::string text;
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t c = 0; c < table.header.size(); ++c) {
                const std::string& v = row[c];
                if (v.empty()) {
                    obj[table.header[c]] = nullptr;
                } else if (v.find_first_of(".eEn") != std::string::npos) {
                    obj[table.header[c]] = std::stod(v);
                } else {
                    obj[table.header[c]] = std::stoll(v);
                }
            }
            rows.push_back(std::move(obj));
        }
        text = rows.dump(2);
        text += '\n';
        return text;
    }
    auto join = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) text += ',';
            text += cells[c];
        }
        text += '\n';
    };
    join(table.header);
    for (const auto& row : table.rows) join(row);
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Solver and sweep tool for the quantum Rabi model with the A^2 term"};
    cli.require_subcommand(1);
    cli.fallthrough();

    std::optional<double> big_delta, osc_delta, f_min, f_max, f_single, epsilon, t_max;
    std::optional<std::size_t> f_steps, levels, samples;
    std::optional<std::string> n_max, window_name, format, out_path, series;
    std::string config_path;
    bool long_format = false;

    cli.add_option("--big-delta", big_delta, "atomic transition frequency in cavity units");
    cli.add_option("--osc-delta", osc_delta, "relative oscillator strength (0 or >= 1)");
    cli.add_option("--f-min", f_min, "lower end of the coupling grid");
    cli.add_option("--f-max", f_max, "upper end of the coupling grid");
    cli.add_option("--f-steps", f_steps, "number of coupling grid points");
    cli.add_option("--f", f_single, "single coupling (sets f-min = f-max, f-steps = 1)");
    cli.add_option("--levels", levels, "levels per parity sector (crossings: number of n values)");
    cli.add_option("--n-max", n_max, "Fock basis size or 'auto'");
    cli.add_option("--epsilon", epsilon, "coherent amplitude of the initial field");
    cli.add_option("--t-max", t_max, "length of the time window");
    cli.add_option("--samples", samples, "number of time samples");
    cli.add_option("--window", window_name, "none | hann");
    cli.add_option("--format", format, "csv | json");
    cli.add_option("--out", out_path, "output file, '-' for standard output");
    cli.add_option("--config", config_path, "JSON file with defaults; flags take precedence");
    cli.add_flag("--long", long_format, "wspec: long-format f,omega,mag over the coupling grid");
    cli.add_option("--series", series, "wspec --long: exact | rwa");

    for (const std::string& name : kCommands) cli.add_subcommand(name, "run the " + name + " computation");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        cli.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config file " + config_path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            apply_config_json(cfg, buffer.str());
        }
        cfg.command = cli.get_subcommands().front()->get_name();
        if (big_delta) cfg.big_delta = *big_delta;
        if (osc_delta) cfg.osc_delta = *osc_delta;
        if (f_min) cfg.f_min = *f_min;
        if (f_max) cfg.f_max = *f_max;
        if (f_steps) cfg.f_steps = *f_steps;
        if (f_single) {
            cfg.f_min = cfg.f_max = *f_single;
            cfg.f_steps = 1;
        }
        if (levels) cfg.levels = *levels;
        if (n_max) cfg.n_max = *n_max;
        if (epsilon) cfg.epsilon = *epsilon;
        if (t_max) cfg.t_max = *t_max;
        if (samples) cfg.samples = *samples;
        if (window_name) cfg.window = *window_name;
        if (format) cfg.format = *format;
        if (out_path) cfg.out = *out_path;
        if (long_format) cfg.long_format = true;
        if (series) cfg.series = *series;
        validate(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    Table table;
    try {
        table = execute(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const TruncationError& e) {
        err << "convergence failure: " << e.what() << '\n';
        return kExitConvergence;
    }

    const std::string text = render(table, cfg.format);
    if (cfg.out == "-") {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file || !(file << text)) {
            err << "error: cannot write " << cfg.out << '\n';
            return kExitIo;
        }
    }
    if (!table.converged) {
        err << "convergence failure: some levels did not converge within the truncation cap\n";
        return kExitConvergence;
    }
    return kExitOk;
}

}  // namespace qrma::app
