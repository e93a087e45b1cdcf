#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pdmfisher/tridiagonal.hpp"

using namespace pdmf::tridiag;

namespace {

// Discrete Laplacian on n points: diag 2, offdiag -1. Eigenpairs are
// known in closed form: lambda_k = 2 - 2 cos(k pi / (n+1)),
// v_k(j) = sin(j k pi / (n+1)), k = 1..n.
SymTridiagonal laplacian(int n) {
    SymTridiagonal t;
    t.diag.assign(n, 2.0);
    t.offdiag.assign(n - 1, -1.0);
    return t;
}

double laplacian_eig(int n, int k) {
    return 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1));
}

} // namespace

TEST_CASE("implicit QL recovers the Laplacian spectrum") {
    const int n = 60;
    auto t = laplacian(n);
    std::vector<double> first(n, 0.0);
    first[0] = 1.0;
    ql_implicit(t.diag, t.offdiag, &first);
    for (int k = 1; k <= n; ++k) {
        CHECK(t.diag[k - 1] ==
              doctest::Approx(laplacian_eig(n, k)).epsilon(1e-12));
        // first components of the normalized eigenvectors:
        // |sin(k pi/(n+1))| / sqrt((n+1)/2)
        const double expected = std::abs(std::sin(k * std::numbers::pi / (n + 1))) /
                                std::sqrt((n + 1) / 2.0);
        CHECK(std::abs(first[k - 1]) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("QL handles the trivial sizes") {
    std::vector<double> d1 = {3.5};
    ql_implicit(d1, {});
    CHECK(d1[0] == 3.5);

    std::vector<double> d2 = {1.0, 1.0};
    ql_implicit(d2, {2.0});
    CHECK(d2[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(d2[1] == doctest::Approx(3.0).epsilon(1e-14));

    std::vector<double> bad = {1.0, 2.0};
    CHECK_THROWS_AS(ql_implicit(bad, {1.0, 7.0}), std::invalid_argument);
}

TEST_CASE("Sturm counts step at the eigenvalues") {
    const int n = 25;
    const auto t = laplacian(n);
    for (int k = 1; k <= n; ++k) {
        const double lam = laplacian_eig(n, k);
        CHECK(sturm_count(t, lam - 1e-9) == k - 1);
        CHECK(sturm_count(t, lam + 1e-9) == k);
    }
    CHECK(sturm_count(t, -1.0) == 0);
    CHECK(sturm_count(t, 5.0) == n);
}

TEST_CASE("bisection extracts the lowest eigenvalues to full precision") {
    const int n = 500;
    const auto t = laplacian(n);
    const auto lows = lowest_eigenvalues(t, 6);
    REQUIRE(lows.size() == 6);
    for (int k = 1; k <= 6; ++k)
        CHECK(lows[k - 1] ==
              doctest::Approx(laplacian_eig(n, k)).epsilon(1e-12));
    CHECK_THROWS_AS(lowest_eigenvalues(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(t, n + 1), std::invalid_argument);
}

TEST_CASE("bisection agrees with QL on random matrices") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 40;
        SymTridiagonal t;
        for (int i = 0; i < n; ++i) t.diag.push_back(entry(rng));
        for (int i = 0; i + 1 < n; ++i) t.offdiag.push_back(entry(rng));

        auto d = t.diag;
        ql_implicit(d, t.offdiag);
        const auto lows = lowest_eigenvalues(t, 5);
        for (int k = 0; k < 5; ++k)
            CHECK(lows[k] == doctest::Approx(d[k]).epsilon(1e-11));
    }
}

TEST_CASE("inverse iteration returns true eigenvectors") {
    const int n = 200;
    const auto t = laplacian(n);
    for (int k : {1, 2, 5}) {
        const double lam = laplacian_eig(n, k);
        const auto v = eigenvector(t, lam);
        REQUIRE(v.size() == static_cast<std::size_t>(n));
        // residual || (T - lam I) v ||
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = (t.diag[i] - lam) * v[i];
            if (i > 0) r += t.offdiag[i - 1] * v[i - 1];
            if (i + 1 < n) r += t.offdiag[i] * v[i + 1];
            res += r * r;
        }
        CHECK(std::sqrt(res) < 1e-10);
        // sign convention and shape: component count of sign flips is k-1
        CHECK(v[0] > 0.0);
        int flips = 0;
        for (int i = 1; i < n; ++i)
            if (std::signbit(v[i]) != std::signbit(v[i - 1])) ++flips;
        CHECK(flips == k - 1);
    }
}
