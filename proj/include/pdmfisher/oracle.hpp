#pragma once

#include <vector>

#include "pdmfisher/tridiagonal.hpp"

// Brute-force spectrum check: finite-difference eigensolver for the
// transformed equation -F''(z) + W(z) F(z) = eps F(z) on z in (0, pi/2),
// W(z) = (3/4) tan^2 z - calV0 cot^2 z + 1/2, whose exact eigenvalues are
// eps_n = 4(n+1)(n+1+s), s = sqrt(1/4 - calV0). Nothing here uses the
// analytic spectrum; it exists to confirm it.
//
// The attractive cot^2 singularity at z = 0 ruins the accuracy of a plain
// hard-wall discretization (the eigenfunctions behave like z^mu there, so
// a central stencil converges only like h^(2mu-1)). The solver therefore
// factors the endpoint behavior out, F = sin^mu(z) G, and discretizes the
// equivalent Sturm-Liouville problem
//   -(w G')' + w q G = eps w G,  w = sin^(2mu) z,  q = (3/4) tan^2 z + mu + 1/2,
// on a cell-centered grid (natural boundary at 0 since w(0) = 0, Dirichlet
// wall at pi/2). G is smooth at both ends and the scheme is cleanly O(h^2),
// which the h/2 Richardson step then cancels.

namespace pdmf::oracle {

struct SpectrumEstimate {
    std::vector<double> eigenvalues;        // Richardson-extrapolated, ascending
    std::vector<double> fine_grid_values;   // raw eigenvalues at the fine grid
    std::vector<double> richardson_error;   // per-eigenvalue estimate, positive
    int grid_points = 0;                    // fine-grid cell count
    double z_margin = 0.0;                  // first node offset from z = 0
};

// Lowest num_levels eigenvalues for depth calV0 in [0, 1/4], from grids of
// grid_points and grid_points/2 cells (grid_points even, >= 64).
SpectrumEstimate solve_spectrum(double calV0, int grid_points, int num_levels);

// The symmetric tridiagonal operator for one grid (exposed for tests).
tridiag::SymTridiagonal build_operator(double calV0, int grid_points);

// Grid values of the level-th eigenfunction (sign-fixed, unit norm); its
// interior sign changes count the level index.
std::vector<double> mode_vector(double calV0, int grid_points, int level);

} // namespace pdmf::oracle
