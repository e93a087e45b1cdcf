#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdmfisher/model.hpp"
#include "pdmfisher/oracle.hpp"

using namespace pdmf::oracle;

namespace {

double exact_eps(double calv0, int n) {
    const double s = std::sqrt(0.25 - calv0);
    return 4.0 * (n + 1.0) * (n + 1.0 + s);
}

} // namespace

TEST_CASE("discretized operator is well formed") {
    const auto t = build_operator(1.0 / 32.0, 256);
    REQUIRE(t.diag.size() == 256);
    REQUIRE(t.offdiag.size() == 255);
    for (double d : t.diag) CHECK(std::isfinite(d));
    for (double e : t.offdiag) {
        CHECK(std::isfinite(e));
        CHECK(e < 0.0);  // coupling terms are negative fluxes
    }
    // confining walls dominate both ends
    CHECK(t.diag.front() > t.diag[t.diag.size() / 2]);
    CHECK(t.diag.back() > t.diag[t.diag.size() / 2]);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_spectrum(0.3, 1024, 2), std::domain_error);
    CHECK_THROWS_AS(solve_spectrum(-0.1, 1024, 2), std::domain_error);
    CHECK_THROWS_AS(solve_spectrum(0.03125, 32, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_spectrum(0.03125, 1023, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_spectrum(0.03125, 128, 100), std::invalid_argument);
}

TEST_CASE("spectrum estimate confirms the analytic levels") {
    const auto est = solve_spectrum(1.0 / 32.0, 2048, 4);
    REQUIRE(est.eigenvalues.size() == 4);
    for (int k = 0; k < 4; ++k) {
        const double exact = exact_eps(1.0 / 32.0, k);
        CHECK(std::abs(est.eigenvalues[k] - exact) / exact < 1e-6);
        CHECK(est.richardson_error[k] > 0.0);
        if (k) CHECK(est.eigenvalues[k] > est.eigenvalues[k - 1]);
    }
    CHECK(est.grid_points == 2048);
    CHECK(est.z_margin == doctest::Approx((std::acos(-1.0) / 2) / 4096));
}

TEST_CASE("single infinite well limit calV0 = 0") {
    const auto est = solve_spectrum(0.0, 1024, 2);
    CHECK(est.eigenvalues[0] == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(est.eigenvalues[1] == doctest::Approx(20.0).epsilon(1e-6));
}

TEST_CASE("level ratio matches the closed ratio of the first two levels") {
    const auto est = solve_spectrum(1.0 / 32.0, 1024, 2);
    const double s = std::sqrt(0.25 - 1.0 / 32.0);
    const double expected = 8.0 * (2.0 + s) / (4.0 * (1.0 + s));
    CHECK(est.eigenvalues[1] / est.eigenvalues[0] ==
          doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("raw eigenvalue error shrinks like h^2") {
    const double exact = exact_eps(1.0 / 8.0, 0);
    const auto coarse = solve_spectrum(1.0 / 8.0, 512, 1);
    const auto fine = solve_spectrum(1.0 / 8.0, 2048, 1);
    const double err_coarse = std::abs(coarse.fine_grid_values[0] - exact);
    const double err_fine = std::abs(fine.fine_grid_values[0] - exact);
    // 4x grid refinement: expect ~16x error reduction for an O(h^2) scheme
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 10.0);
    CHECK(ratio < 26.0);
}

TEST_CASE("Richardson extrapolation beats the raw fine grid") {
    for (double v0 : {0.0, 1.0 / 32.0, 1.0 / 8.0}) {
        const auto est = solve_spectrum(v0, 1024, 3);
        for (int k = 0; k < 3; ++k) {
            const double exact = exact_eps(v0, k);
            const double raw = std::abs(est.fine_grid_values[k] - exact);
            const double extrap = std::abs(est.eigenvalues[k] - exact);
            CHECK(extrap < raw);
            // the error estimate bounds the true extrapolated error
            CHECK(extrap < est.richardson_error[k]);
        }
    }
}

TEST_CASE("mode vectors oscillate per the level index") {
    for (int level = 0; level <= 3; ++level) {
        const auto v = mode_vector(1.0 / 32.0, 1024, level);
        REQUIRE(v.size() == 1024);
        int sign_changes = 0;
        double prev = 0.0;
        for (double x : v) {
            if (std::abs(x) < 1e-9) continue;  // skip numerically dead entries
            if (prev != 0.0 && std::signbit(prev) != std::signbit(x))
                ++sign_changes;
            prev = x;
        }
        CHECK(sign_changes == level);
    }
}
