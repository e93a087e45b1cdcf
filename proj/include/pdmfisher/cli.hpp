#pragma once

#include <optional>
#include <string>
#include <vector>

// Command implementations behind the pdmfisher executable. Kept apart from
// the argument parser so the formatting and exit-code logic is testable;
// identical configs produce byte-identical output.

namespace pdmf::cli {

enum class Format { table, csv, json };

struct RunConfig {
    double v0_dimensionless = 1.0 / 32.0;     // calV0
    std::vector<double> a_values = {1.0, 2.0, 4.0};
    std::vector<int> levels = {0, 1, 2};
    double m0 = 1.0;
    Format format = Format::table;
    std::optional<double> tolerance;          // unset: per-command default
    int grid_points = 4096;
};

struct CommandResult {
    std::string output;  // stdout payload
    std::string note;    // stderr diagnostics, may be empty
    int exit_code = 0;   // 0 ok, 1 computation failure, 2 invalid arguments
};

Format parse_format(const std::string& name);

// Plain key=value file (keys v0, a, n, m0, format, tol, grid; '#' comments).
// Values already present on the command line win over the file.
void apply_config_file(RunConfig& config, const std::string& path);

// Shortest representation with the given number of significant digits.
std::string format_significant(double v, int digits);
// Round-trippable representation.
std::string format_full(double v);

// Summary table, one row per (n, a), sorted by (n, a).
CommandResult cmd_table(const RunConfig& config);

// Analytic spectrum against the finite-difference estimate.
CommandResult cmd_spectrum(const RunConfig& config);

// Sampled (x, psi, rho=psi^2) series on a log-spaced grid, for plotting.
CommandResult cmd_profile(const RunConfig& config, int n, int samples);

// Single Fisher value; method is "closed" or "quadrature".
CommandResult cmd_fisher(const RunConfig& config, const std::string& method);

} // namespace pdmf::cli
