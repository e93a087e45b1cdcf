#pragma once

#include <vector>

// Symmetric tridiagonal eigenvalue kernels. Two extraction routes for two
// different workloads: implicit QL when all eigenvalues (plus first
// eigenvector components) of a small matrix are wanted, Sturm-count
// bisection when only the lowest few eigenvalues of a large matrix are.

namespace pdmf::tridiag {

struct SymTridiagonal {
    std::vector<double> diag;     // size m
    std::vector<double> offdiag;  // size m-1

    std::size_t size() const { return diag.size(); }
};

// Implicit QL with shifts (EISPACK imtql2 lineage). On return `diag`
// holds the eigenvalues in ascending order and `vec0`, when non-null,
// has been replaced by Q^T * vec0. Passing the first unit vector yields
// the first component of every eigenvector, which is what Golub-Welsch
// quadrature weights need.
void ql_implicit(std::vector<double>& diag, std::vector<double> offdiag,
                 std::vector<double>* vec0 = nullptr);

// Number of eigenvalues of T strictly less than x (Sturm sequence count).
int sturm_count(const SymTridiagonal& t, double x);

// Lowest k eigenvalues by bisection on Sturm counts, ascending.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k);

// Eigenvector for an isolated eigenvalue estimate, by inverse iteration
// with a partially pivoted tridiagonal solve. Normalized to unit length.
std::vector<double> eigenvector(const SymTridiagonal& t, double lambda);

} // namespace pdmf::tridiag
