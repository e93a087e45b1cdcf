#pragma once

// Special functions behind the closed-form machinery: Jacobi polynomials,
// terminating Gauss hypergeometric sums, log-gamma, digamma, harmonic
// numbers of real argument, Pochhammer symbols.
//
// Everything here is a pure function of its arguments; safe to call from
// any number of threads.

namespace pdmf::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Parameter set of a Jacobi polynomial P_n^{(alpha,beta)}.
// alpha > -1 and beta > -1 keep the weight (1-x)^alpha (1+x)^beta integrable.
struct JacobiParams {
    double alpha;
    double beta;
    int n;

    JacobiParams(double alpha, double beta, int n);
};

// P_n^{(alpha,beta)}(x) on [-1,1] via the ascending three-term recurrence.
// Exact polynomial evaluation, no series truncation. Arguments up to
// 1e-12 outside [-1,1] are clamped; anything farther is a domain error.
double jacobi_eval(const JacobiParams& p, double x);

// d/dx P_n^{(alpha,beta)}(x) through the degree-lowering identity
//   d/dx P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
// Zero for n = 0.
double jacobi_derivative(const JacobiParams& p, double x);

// k-th derivative, the same identity applied k times. Zero for k > n.
double jacobi_derivative_k(const JacobiParams& p, double x, int k);

// 2F1(-n, b; c; x) evaluated as the exact finite sum of n+1 terms.
// `neg_n` must be a non-positive integer (-n); throws if (c)_k hits a
// pole before the series terminates.
double hyp2f1_terminating(int neg_n, double b, double c, double x);

// ln Gamma(x) for x > 0, >= 13 correct digits.
double log_gamma(double x);

// digamma(x) = Gamma'(x)/Gamma(x) for x > 0, >= 13 correct digits.
double digamma(double x);

// Harmonic number of real argument: H_x = digamma(x+1) + euler_gamma, x > -1.
double harmonic(double x);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
double pochhammer(double x, int n);

} // namespace pdmf::specfun
