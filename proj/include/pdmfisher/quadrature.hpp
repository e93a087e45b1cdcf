#pragma once

#include <functional>
#include <vector>

// Weighted numerical integration: Gauss-Jacobi rules for endpoint-singular
// weights on [-1,1] (Golub-Welsch construction) and a globally adaptive
// Gauss-Kronrod integrator for everything else. Rules are immutable after
// construction and freely shareable across threads.

namespace pdmf::quadrature {

using Integrand = std::function<double(double)>;

// Nodes and weights of an N-point rule for integrals against the weight
// (hi-t)^alpha (t-lo)^beta on (lo, hi). Exact on polynomials of degree
// <= 2N-1 by construction.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double lo = -1.0;
    double hi = 1.0;
    double alpha = 0.0;
    double beta = 0.0;

    double integrate(const Integrand& f) const;
};

// Gauss-Jacobi rule on (-1,1); requires alpha > -1 and beta > -1.
QuadratureRule gauss_jacobi_rule(double alpha, double beta, int n_points);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Globally adaptive 7/15-point Gauss-Kronrod bisection on [lo, hi].
// Converges to |result - truth| <= max(tol*|truth|, tol) for integrands
// that are finite on the open interval with at most integrable endpoint
// singularities; throws std::runtime_error instead of returning a silent
// wrong answer when the subdivision budget runs out.
IntegralResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                  double tol);

// Integral of f over (0, inf) for integrands with at least exponential
// decay. Maps x = artanh(sqrt(y)) onto the unit interval and delegates to
// integrate_adaptive, with substitutions that keep both endpoints benign
// (y = v^2 on the left, y = 1 - exp(-u) on the right).
IntegralResult integrate_semi_infinite(const Integrand& f, double tol);

} // namespace pdmf::quadrature
