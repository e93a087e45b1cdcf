#include "pdmfisher/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pdmfisher/measures.hpp"
#include "pdmfisher/model.hpp"
#include "pdmfisher/oracle.hpp"

namespace pdmf::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kTableDigits = 6;  // matches the reference table's precision

std::string printf_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("could not parse number '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("could not parse integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// RFC-4180-style quoting; numeric fields never need it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    return quoted + "\"";
}

void validate_config(const RunConfig& c) {
    if (!(c.v0_dimensionless >= 0.0 && c.v0_dimensionless <= 0.25))
        throw std::domain_error(
            "v0 must lie in [0, 1/4] (bound-state condition)");
    if (c.a_values.empty()) throw std::invalid_argument("need at least one a");
    for (double a : c.a_values)
        if (!(a > 0.0)) throw std::domain_error("a values must be positive");
    if (!(c.m0 > 0.0)) throw std::domain_error("m0 must be positive");
    if (c.levels.empty()) throw std::invalid_argument("need at least one level");
    for (int n : c.levels)
        if (n < 0) throw std::domain_error("levels must be non-negative");
    if (c.tolerance && !(*c.tolerance > 0.0))
        throw std::domain_error("tolerance must be positive");
}

CommandResult failure(const std::exception& e) {
    CommandResult r;
    r.note = e.what();
    r.exit_code =
        (dynamic_cast<const std::domain_error*>(&e) != nullptr ||
         dynamic_cast<const std::invalid_argument*>(&e) != nullptr)
            ? 2
            : 1;
    return r;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += "  ";
            out.append(width[j] - row[j].size(), ' ');
            out += row[j];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += csv_field(row[j]);
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected table|csv|json)");
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "v0") {
            config.v0_dimensionless = parse_double(value);
        } else if (key == "a") {
            config.a_values.clear();
            for (const auto& item : split(value, ','))
                config.a_values.push_back(parse_double(trim(item)));
        } else if (key == "n") {
            config.levels.clear();
            for (const auto& item : split(value, ','))
                config.levels.push_back(parse_int(trim(item)));
        } else if (key == "m0") {
            config.m0 = parse_double(value);
        } else if (key == "format") {
            config.format = parse_format(value);
        } else if (key == "tol") {
            config.tolerance = parse_double(value);
        } else if (key == "grid") {
            config.grid_points = parse_int(value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
}

std::string format_significant(double v, int digits) {
    if (v == 0.0) v = 0.0;  // unsign negative zeros
    return printf_double(("%." + std::to_string(digits) + "g").c_str(), v);
}

std::string format_full(double v) {
    if (v == 0.0) v = 0.0;
    return printf_double("%.17g", v);
}

CommandResult cmd_table(const RunConfig& config) {
    CommandResult res;
    try {
        validate_config(config);
        measures::Options opt;
        opt.tol = config.tolerance.value_or(1e-9);  // table prints 6 digits

        auto levels = config.levels;
        auto a_values = config.a_values;
        std::sort(levels.begin(), levels.end());
        std::sort(a_values.begin(), a_values.end());

        if (config.v0_dimensionless == 0.25)
            res.note =
                "closed-form unavailable (mu = 1/2): Fisher information and "
                "momentum moments diverge at the critical depth; quadrature "
                "rows report them as infinite";

        std::vector<measures::MeasureReport> reports;
        for (int n : levels)
            for (double a : a_values) {
                const auto params =
                    model::params_from_calv0(config.v0_dimensionless, a, config.m0);
                reports.push_back(measures::report(params, n, opt));
            }

        if (config.format == Format::json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) {
                ordered_json row;
                row["n"] = r.n;
                row["a"] = r.a;
                row["x_mean"] = r.x_mean;
                row["x2_mean"] = r.x2_mean;
                row["dx"] = r.dx;
                row["p_mean"] = r.p_mean;
                row["p2_mean"] = r.p2_mean;
                row["dp"] = r.dp;
                row["heisenberg"] = r.heisenberg;
                row["fisher_x"] = r.fisher_x;
                row["i_rho"] = r.i_rho;
                row["i_gamma"] = r.i_gamma;
                row["variance"] = r.variance;
                row["cramer_rao_v"] = r.cramer_rao_v;
                row["cramer_rao_prod"] = r.cramer_rao_prod;
                arr.push_back(std::move(row));
            }
            res.output = arr.dump(2) + "\n";
            return res;
        }

        const bool full = config.format == Format::csv;
        auto fmt = [&](double v) {
            return full ? format_full(v) : format_significant(v, kTableDigits);
        };
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : reports)
            rows.push_back({std::to_string(r.n), fmt(r.a), fmt(r.x2_mean),
                            fmt(r.x_mean), fmt(r.dx), fmt(r.p2_mean), fmt(r.dp),
                            fmt(r.heisenberg), fmt(r.i_rho), fmt(r.i_gamma)});
        if (config.format == Format::csv) {
            res.output = render_csv({"n", "a", "x2_mean", "x_mean", "dx",
                                     "p2_mean", "dp", "heisenberg", "i_rho",
                                     "i_gamma"},
                                    rows);
        } else {
            res.output = render_table({"n", "a", "<x^2>", "<x>", "D(x)", "<p^2>",
                                       "D(p)", "D(x)D(p)", "I_rho", "I_gamma"},
                                      rows);
        }
        return res;
    } catch (const std::exception& e) {
        return failure(e);
    }
}

CommandResult cmd_spectrum(const RunConfig& config) {
    CommandResult res;
    try {
        validate_config(config);
        const double tol = config.tolerance.value_or(1e-6);
        const int num_levels =
            *std::max_element(config.levels.begin(), config.levels.end()) + 1;
        const auto est = oracle::solve_spectrum(config.v0_dimensionless,
                                                config.grid_points, num_levels);
        const auto params =
            model::params_from_calv0(config.v0_dimensionless, 1.0, config.m0);

        auto levels = config.levels;
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

        struct Row {
            int n;
            double analytic, estimate, rich_err, rel_diff;
        };
        std::vector<Row> data;
        bool within = true;
        for (int n : levels) {
            const double analytic = model::energy(params, n).eps;
            const double estimate = est.eigenvalues[n];
            const double rel = std::abs(estimate - analytic) / analytic;
            within = within && rel <= tol;
            data.push_back({n, analytic, estimate, est.richardson_error[n], rel});
        }
        if (!within) {
            res.exit_code = 1;
            res.note = "spectrum estimate misses the analytic value beyond tol=" +
                       format_significant(tol, 3);
        }

        if (config.format == Format::json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : data) {
                ordered_json row;
                row["n"] = r.n;
                row["analytic_eps"] = r.analytic;
                row["oracle_eps"] = r.estimate;
                row["richardson_error"] = r.rich_err;
                row["rel_diff"] = r.rel_diff;
                arr.push_back(std::move(row));
            }
            res.output = arr.dump(2) + "\n";
            return res;
        }
        const bool full = config.format == Format::csv;
        auto fmt = [&](double v) {
            return full ? format_full(v) : format_significant(v, 9);
        };
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : data)
            rows.push_back({std::to_string(r.n), fmt(r.analytic), fmt(r.estimate),
                            format_significant(r.rich_err, 3),
                            format_significant(r.rel_diff, 3)});
        const std::vector<std::string> header = {"n", "analytic_eps", "oracle_eps",
                                                 "richardson_error", "rel_diff"};
        res.output = config.format == Format::csv ? render_csv(header, rows)
                                                  : render_table(header, rows);
        return res;
    } catch (const std::exception& e) {
        return failure(e);
    }
}

CommandResult cmd_profile(const RunConfig& config, int n, int samples) {
    CommandResult res;
    try {
        validate_config(config);
        if (n < 0) throw std::domain_error("profile: level must be non-negative");
        if (samples < 2) throw std::invalid_argument("profile: samples must be >= 2");
        const double a = config.a_values.front();
        const auto params =
            model::params_from_calv0(config.v0_dimensionless, a, config.m0);

        // Locate the density peak, then extend until the tail is 12 orders
        // of magnitude down.
        double rho_max = 0.0, x_peak = 1.0 / a;
        for (int i = 0; i < 400; ++i) {
            const double x = std::pow(10.0, -3.0 + 4.5 * i / 399.0) / a;
            const double psi = model::wavefunction_x(params, n, x);
            if (psi * psi > rho_max) {
                rho_max = psi * psi;
                x_peak = x;
            }
        }
        // Three consecutive sub-threshold samples, so a node dip cannot
        // masquerade as the tail.
        double x_max = x_peak;
        for (int below = 0; below < 3; x_max *= 1.25) {
            const double psi = model::wavefunction_x(params, n, x_max);
            below = (psi * psi < 1e-12 * rho_max) ? below + 1 : 0;
        }
        const double x_min = x_max * 1e-4;

        struct Row {
            double x, psi, rho;
        };
        std::vector<Row> data;
        for (int i = 0; i < samples; ++i) {
            const double x =
                x_min * std::pow(x_max / x_min,
                                 static_cast<double>(i) / (samples - 1));
            const double psi = model::wavefunction_x(params, n, x);
            data.push_back({x, psi, psi * psi});
        }

        if (config.format == Format::json) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : data) {
                ordered_json row;
                row["x"] = r.x;
                row["psi"] = r.psi;
                row["rho"] = r.rho;
                arr.push_back(std::move(row));
            }
            res.output = arr.dump(2) + "\n";
            return res;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : data)
            rows.push_back({format_full(r.x), format_full(r.psi),
                            format_full(r.rho)});
        const std::vector<std::string> header = {"x", "psi", "rho"};
        res.output = config.format == Format::csv ? render_csv(header, rows)
                                                  : render_table(header, rows);
        return res;
    } catch (const std::exception& e) {
        return failure(e);
    }
}

CommandResult cmd_fisher(const RunConfig& config, const std::string& method) {
    CommandResult res;
    try {
        validate_config(config);
        if (config.levels.size() != 1 || config.a_values.size() != 1)
            throw std::invalid_argument(
                "fisher: single-value mode expects exactly one --n and one --a");
        if (method != "closed" && method != "quadrature")
            throw std::invalid_argument("fisher: method must be closed|quadrature");
        const int n = config.levels.front();
        const auto params = model::params_from_calv0(config.v0_dimensionless,
                                                     config.a_values.front(),
                                                     config.m0);
        measures::Options opt;
        opt.tol = config.tolerance.value_or(1e-11);
        const double value = method == "closed"
                                 ? measures::fisher_closed_form(params, n)
                                 : measures::fisher_quadrature(params, n, opt);

        if (config.format == Format::json) {
            ordered_json row;
            row["n"] = n;
            row["a"] = params.a;
            row["v0"] = params.calV0;
            row["method"] = method;
            row["fisher"] = value;
            res.output = row.dump(2) + "\n";
        } else if (config.format == Format::csv) {
            res.output = render_csv({"n", "a", "v0", "method", "fisher"},
                                    {{std::to_string(n), format_full(params.a),
                                      format_full(params.calV0), method,
                                      format_full(value)}});
        } else {
            res.output = render_table({"n", "a", "v0", "method", "fisher"},
                                      {{std::to_string(n),
                                        format_significant(params.a, 6),
                                        format_significant(params.calV0, 6),
                                        method,
                                        format_significant(value, 6)}});
        }
        return res;
    } catch (const std::exception& e) {
        return failure(e);
    }
}

} // namespace pdmf::cli
