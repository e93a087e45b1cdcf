#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdmfisher/cli.hpp"

namespace {

using pdmf::cli::CommandResult;
using pdmf::cli::RunConfig;

int emit(const CommandResult& result) {
    if (!result.output.empty()) std::fputs(result.output.c_str(), stdout);
    if (!result.note.empty()) std::fprintf(stderr, "%s\n", result.note.c_str());
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bound states of the solitonic position-dependent-mass system "
        "m(x) = m0 sech^2(ax), V(x) = -V0 csch^2(ax): summary tables, "
        "Fisher information, spectrum checks and density profiles."};
    app.require_subcommand(1);

    // Raw option holders; a config file fills the gaps for flags not given.
    std::optional<double> v0, m0, tol;
    std::vector<double> a_values;
    std::vector<int> levels;
    std::optional<int> grid;
    std::optional<std::string> format_name;
    std::string config_path;
    std::string method = "closed";
    int samples = 100;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--v0", v0, "dimensionless depth calV0 (default 1/32)");
        cmd->add_option("--a", a_values, "width parameters (default 1,2,4)")
            ->delimiter(',');
        cmd->add_option("--n", levels, "level indices (default 0,1,2)")
            ->delimiter(',');
        cmd->add_option("--m0", m0, "mass scale (default 1)");
        cmd->add_option("--format", format_name, "output format: table|csv|json");
        cmd->add_option("--tol", tol, "tolerance override");
        cmd->add_option("--grid", grid, "finite-difference grid size (default 4096)");
        cmd->add_option("--config", config_path, "key=value config file");
    };

    CLI::App* table = app.add_subcommand("table", "summary table per (n, a)");
    add_common(table);
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "analytic vs finite-difference spectrum");
    add_common(spectrum);
    CLI::App* profile =
        app.add_subcommand("profile", "sampled wavefunction and density "
                                      "(uses the first --a value)");
    add_common(profile);
    profile->add_option("--samples", samples, "number of sample points")
        ->check(CLI::PositiveNumber);
    CLI::App* fisher =
        app.add_subcommand("fisher", "single Fisher value for one (n, a)");
    add_common(fisher);
    fisher->add_option("--method", method, "closed|quadrature");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) pdmf::cli::apply_config_file(config, config_path);
        // Explicit flags win over the file.
        if (v0) config.v0_dimensionless = *v0;
        if (!a_values.empty()) config.a_values = a_values;
        if (!levels.empty()) config.levels = levels;
        if (m0) config.m0 = *m0;
        if (format_name) config.format = pdmf::cli::parse_format(*format_name);
        if (tol) config.tolerance = tol;
        if (grid) config.grid_points = *grid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    if (table->parsed()) return emit(pdmf::cli::cmd_table(config));
    if (spectrum->parsed()) return emit(pdmf::cli::cmd_spectrum(config));
    if (profile->parsed()) {
        if (config.levels.size() != 1) {
            std::fprintf(stderr, "profile: expected exactly one --n value\n");
            return 2;
        }
        return emit(pdmf::cli::cmd_profile(config, config.levels.front(), samples));
    }
    if (fisher->parsed()) return emit(pdmf::cli::cmd_fisher(config, method));
    return 2;
}
