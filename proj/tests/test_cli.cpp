#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdmfisher/cli.hpp"

using namespace pdmf::cli;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(fields);
    }
    return rows;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("pdmfisher_cli_test_" + std::to_string(++counter) + ".cfg"))
                   .string();
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("format_significant matches the table precision") {
    CHECK(format_significant(0.80840279645756967, 6) == "0.808403");
    CHECK(format_significant(11.699429902962461, 6) == "11.6994");
    CHECK(format_significant(1349.1035647024245, 6) == "1349.1");
    CHECK(format_significant(-0.0, 6) == "0");
}

TEST_CASE("parse_format accepts only the documented names") {
    CHECK(parse_format("table") == Format::table);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("identical configs give byte-identical output") {
    RunConfig config;
    config.format = Format::csv;
    const auto first = cmd_table(config);
    const auto second = cmd_table(config);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);

    config.format = Format::json;
    CHECK(cmd_table(config).output == cmd_table(config).output);
}

TEST_CASE("csv, json and table carry the same numbers") {
    RunConfig config;
    config.levels = {0, 1};
    config.a_values = {1.0, 2.0};

    config.format = Format::csv;
    const auto csv_rows = parse_csv(cmd_table(config).output);
    config.format = Format::json;
    const auto arr = ordered_json::parse(cmd_table(config).output);
    config.format = Format::table;
    std::stringstream table_stream(cmd_table(config).output);

    REQUIRE(csv_rows.size() == 5);  // header + 4 rows
    REQUIRE(arr.size() == 4);
    const std::vector<std::string> csv_cols = {"n",  "a",  "x2_mean", "x_mean",
                                               "dx", "p2_mean", "dp",
                                               "heisenberg", "i_rho", "i_gamma"};
    REQUIRE(csv_rows[0] == csv_cols);

    std::string header_line;
    std::getline(table_stream, header_line);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& line = csv_rows[i + 1];
        const auto& obj = arr[i];
        // csv fields round-trip exactly to the json values
        for (std::size_t c = 2; c < csv_cols.size(); ++c)
            CHECK(std::stod(line[c]) ==
                  obj.at(csv_cols[c]).get<double>());
        // the table format shows the same values at 6 significant digits
        std::string table_line;
        std::getline(table_stream, table_line);
        std::stringstream fields(table_line);
        std::string n_str, a_str, x2_str;
        fields >> n_str >> a_str >> x2_str;
        CHECK(x2_str ==
              format_significant(obj.at("x2_mean").get<double>(), 6));
    }
}

TEST_CASE("json rows expose the full measure record") {
    RunConfig config;
    config.levels = {0};
    config.a_values = {2.0};
    config.format = Format::json;
    const auto result = cmd_table(config);
    REQUIRE(result.exit_code == 0);
    const auto arr = ordered_json::parse(result.output);
    REQUIRE(arr.size() == 1);
    const auto& row = arr[0];
    for (const char* key :
         {"n", "a", "x_mean", "x2_mean", "dx", "p_mean", "p2_mean", "dp",
          "heisenberg", "fisher_x", "i_rho", "i_gamma", "variance",
          "cramer_rao_v", "cramer_rao_prod"})
        CHECK(row.contains(key));
    CHECK(row.at("n").get<int>() == 0);
    CHECK(row.at("a").get<double>() == 2.0);
    CHECK(row.at("p2_mean").get<double>() ==
          doctest::Approx(11.6994).epsilon(5e-6));
}

TEST_CASE("rows come out sorted by (n, a) regardless of input order") {
    RunConfig config;
    config.levels = {2, 0};
    config.a_values = {4.0, 1.0};
    config.format = Format::json;
    const auto arr = ordered_json::parse(cmd_table(config).output);
    REQUIRE(arr.size() == 4);
    CHECK(arr[0].at("n") == 0);
    CHECK(arr[0].at("a") == 1.0);
    CHECK(arr[1].at("n") == 0);
    CHECK(arr[1].at("a") == 4.0);
    CHECK(arr[3].at("n") == 2);
    CHECK(arr[3].at("a") == 4.0);
}

TEST_CASE("critical depth: rows still come out, with a note") {
    RunConfig config;
    config.v0_dimensionless = 0.25;
    config.levels = {0};
    config.a_values = {1.0};
    config.format = Format::json;
    const auto result = cmd_table(config);
    CHECK(result.exit_code == 0);
    CHECK(result.note.find("mu = 1/2") != std::string::npos);
    const auto arr = ordered_json::parse(result.output);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0].at("x2_mean").get<double>() > 0.0);
    CHECK(arr[0].at("p2_mean").is_null());  // infinite -> null in json
}

TEST_CASE("invalid configurations exit with code 2") {
    RunConfig config;
    config.v0_dimensionless = 0.3;
    CHECK(cmd_table(config).exit_code == 2);
    config = RunConfig{};
    config.a_values = {-1.0};
    CHECK(cmd_table(config).exit_code == 2);
    config = RunConfig{};
    config.levels = {};
    CHECK(cmd_table(config).exit_code == 2);
}

TEST_CASE("config files feed the run configuration") {
    const TempFile file(
        "# comment line\n"
        "v0 = 0.125\n"
        "a = 1, 2\n"
        "n = 0,1\n"
        "format = csv\n"
        "tol = 1e-9\n"
        "grid = 512\n");
    RunConfig config;
    apply_config_file(config, file.path);
    CHECK(config.v0_dimensionless == 0.125);
    CHECK(config.a_values == std::vector<double>{1.0, 2.0});
    CHECK(config.levels == std::vector<int>{0, 1});
    CHECK(config.format == Format::csv);
    CHECK(config.tolerance == 1e-9);
    CHECK(config.grid_points == 512);

    const TempFile bad("unknown_key = 1\n");
    RunConfig other;
    CHECK_THROWS_AS(apply_config_file(other, bad.path), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_file(other, "/nonexistent/path.cfg"),
                    std::invalid_argument);
}

TEST_CASE("spectrum command reports sub-tolerance agreement") {
    RunConfig config;
    config.levels = {0, 1};
    config.grid_points = 1024;
    config.format = Format::json;
    const auto result = cmd_spectrum(config);
    REQUIRE(result.exit_code == 0);
    const auto arr = ordered_json::parse(result.output);
    REQUIRE(arr.size() == 2);
    for (const auto& row : arr) {
        CHECK(row.at("rel_diff").get<double>() < 1e-6);
        CHECK(row.at("richardson_error").get<double>() > 0.0);
    }
    CHECK(arr[0].at("analytic_eps").get<double>() ==
          doctest::Approx(5.8708286933869707).epsilon(1e-14));
}

TEST_CASE("spectrum of the zero-depth well") {
    RunConfig config;
    config.v0_dimensionless = 0.0;
    config.levels = {0};
    config.grid_points = 512;
    config.format = Format::json;
    const auto arr = ordered_json::parse(cmd_spectrum(config).output);
    CHECK(arr[0].at("analytic_eps").get<double>() == 6.0);
}

TEST_CASE("profile output: shape, positivity, node count, coarse norm") {
    RunConfig config;
    config.a_values = {1.0};
    config.format = Format::json;

    const auto arr0 = ordered_json::parse(cmd_profile(config, 0, 100).output);
    REQUIRE(arr0.size() == 100);
    double prev_x = 0.0;
    for (const auto& row : arr0) {
        CHECK(row.at("rho").get<double>() >= 0.0);
        CHECK(row.at("x").get<double>() > prev_x);
        prev_x = row.at("x").get<double>();
    }

    // exactly one interior sign change for n = 1
    const auto arr1 = ordered_json::parse(cmd_profile(config, 1, 400).output);
    int changes = 0;
    double prev = 0.0;
    for (const auto& row : arr1) {
        const double psi = row.at("psi").get<double>();
        if (psi == 0.0) continue;
        if (prev != 0.0 && std::signbit(prev) != std::signbit(psi)) ++changes;
        prev = psi;
    }
    CHECK(changes == 1);

    // trapezoid over the log-spaced grid recovers the normalization coarsely
    const auto dense = ordered_json::parse(cmd_profile(config, 0, 2000).output);
    double integral = 0.0;
    for (std::size_t i = 1; i < dense.size(); ++i) {
        const double x0 = dense[i - 1].at("x").get<double>();
        const double x1 = dense[i].at("x").get<double>();
        const double r0 = dense[i - 1].at("rho").get<double>();
        const double r1 = dense[i].at("rho").get<double>();
        integral += 0.5 * (r0 + r1) * (x1 - x0);
    }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));

    CHECK(cmd_profile(config, -1, 100).exit_code == 2);
    CHECK(cmd_profile(config, 0, 1).exit_code == 2);
}

TEST_CASE("fisher command: methods agree, bad input is rejected") {
    RunConfig config;
    config.levels = {1};
    config.a_values = {2.0};
    config.format = Format::json;
    const auto closed = ordered_json::parse(cmd_fisher(config, "closed").output);
    const auto quad =
        ordered_json::parse(cmd_fisher(config, "quadrature").output);
    CHECK(closed.at("fisher").get<double>() ==
          doctest::Approx(quad.at("fisher").get<double>()).epsilon(1e-12));
    CHECK(closed.at("method") == "closed");

    RunConfig multi;
    multi.levels = {0, 1};
    CHECK(cmd_fisher(multi, "closed").exit_code == 2);
    CHECK(cmd_fisher(config, "exact").exit_code == 2);

    RunConfig critical;
    critical.levels = {0};
    critical.a_values = {1.0};
    critical.v0_dimensionless = 0.25;
    CHECK(cmd_fisher(critical, "closed").exit_code == 2);
}
