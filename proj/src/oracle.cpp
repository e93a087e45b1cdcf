#include "pdmfisher/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdmf::oracle {

namespace {

void check_inputs(double calV0, int grid_points, int num_levels) {
    if (!(calV0 >= 0.0 && calV0 <= 0.25))
        throw std::domain_error("oracle: calV0 must lie in [0, 1/4]");
    if (grid_points < 64)
        throw std::invalid_argument("oracle: need at least 64 grid points");
    if (grid_points % 2 != 0)
        throw std::invalid_argument(
            "oracle: grid_points must be even (Richardson halving)");
    if (num_levels < 1 || 8 * num_levels > grid_points)
        throw std::invalid_argument("oracle: num_levels too large for the grid");
}

} // namespace

tridiag::SymTridiagonal build_operator(double calV0, int grid_points) {
    if (!(calV0 >= 0.0 && calV0 <= 0.25))
        throw std::domain_error("oracle: calV0 must lie in [0, 1/4]");
    if (grid_points < 2)
        throw std::invalid_argument("oracle: grid too small");

    const int m = grid_points;
    const double mu = 0.5 + std::sqrt(0.25 - calV0);
    const double h = (std::numbers::pi / 2.0) / m;
    const double inv_h2 = 1.0 / (h * h);

    auto weight = [&](double z) { return std::pow(std::sin(z), 2.0 * mu); };

    tridiag::SymTridiagonal t;
    t.diag.resize(m);
    t.offdiag.resize(m - 1);

    std::vector<double> w_center(m), w_face(m + 1);
    for (int j = 0; j < m; ++j) w_center[j] = weight((j + 0.5) * h);
    for (int j = 0; j <= m; ++j) w_face[j] = weight(j * h);
    // w_face[0] = 0: the flux through z = 0 vanishes (natural boundary).

    for (int j = 0; j < m; ++j) {
        const double z = (j + 0.5) * h;
        const double tanz = std::tan(z);
        const double q = 0.75 * tanz * tanz + mu + 0.5;
        // Dirichlet wall half a cell beyond the last center.
        const double right = (j + 1 < m) ? w_face[j + 1] : 2.0 * w_face[m];
        t.diag[j] = (w_face[j] + right) * inv_h2 / w_center[j] + q;
        if (j + 1 < m)
            t.offdiag[j] =
                -w_face[j + 1] * inv_h2 / std::sqrt(w_center[j] * w_center[j + 1]);
    }
    return t;
}

SpectrumEstimate solve_spectrum(double calV0, int grid_points, int num_levels) {
    check_inputs(calV0, grid_points, num_levels);

    const auto fine =
        tridiag::lowest_eigenvalues(build_operator(calV0, grid_points), num_levels);
    const auto coarse = tridiag::lowest_eigenvalues(
        build_operator(calV0, grid_points / 2), num_levels);

    SpectrumEstimate est;
    est.grid_points = grid_points;
    est.z_margin = (std::numbers::pi / 2.0) / grid_points * 0.5;
    est.fine_grid_values = fine;
    est.eigenvalues.resize(num_levels);
    est.richardson_error.resize(num_levels);
    for (int k = 0; k < num_levels; ++k) {
        // O(h^2) scheme, exact grid halving: eliminate the leading term.
        est.eigenvalues[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
        const double shift = std::abs(est.eigenvalues[k] - fine[k]);
        est.richardson_error[k] = std::max(
            shift, std::abs(est.eigenvalues[k]) * 1e-15);
    }
    for (int k = 1; k < num_levels; ++k)
        if (!(est.eigenvalues[k] > est.eigenvalues[k - 1]))
            throw std::runtime_error(
                "solve_spectrum: eigenvalues failed to come out ascending");
    return est;
}

std::vector<double> mode_vector(double calV0, int grid_points, int level) {
    check_inputs(calV0, grid_points, level + 1);
    const auto t = build_operator(calV0, grid_points);
    const auto evals = tridiag::lowest_eigenvalues(t, level + 1);
    return tridiag::eigenvector(t, evals[level]);
}

} // namespace pdmf::oracle
