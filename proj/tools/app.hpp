#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrma::app {

/// Every knob of a command-line run. Defaults reproduce the figure parameters
/// (D = 1, delta = 1, f in [0, 1], eps^2 = 25, T = 100).
struct RunConfig {
    std::string command;
    double big_delta = 1.0;
    double osc_delta = 1.0;
    double f_min = 0.0;
    double f_max = 1.0;
    std::size_t f_steps = 101;
    std::size_t levels = 6;
    std::string n_max = "auto";
    double epsilon = 5.0;
    double t_max = 100.0;
    std::size_t samples = 4096;
    std::string window = "none";
    std::string format = "csv";
    std::string out = "-";
    bool long_format = false;     ///< wspec: emit f,omega,mag rows over the whole f grid
    std::string series = "exact"; ///< wspec long format: which inversion to transform
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConvergence = 3;

/// Thrown for invalid or inconsistent configuration (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A table of pre-formatted cells; empty cells mean "no value".
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool converged = true;
};

/// Applies a JSON config document (keys are flag names without the leading dashes,
/// with '-' or '_' separators) on top of cfg. Throws ConfigError.
void apply_config_json(RunConfig& cfg, const std::string& json_text);

/// Checks every field against the preconditions of the selected command.
void validate(const RunConfig& cfg);

/// Runs the selected command and returns its table.
Table execute(const RunConfig& cfg);

/// Serializes a table as CSV (17 significant digits, '\n' endings) or a JSON array.
std::string render(const Table& table, const std::string& format);

/// %.17g
std::string format_number(double x);

/// Full command-line entry point. Writes the result to cfg.out (or `out` for "-")
/// and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrma::app
