#include "pdmfisher/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmfisher/specfun.hpp"

namespace pdmf::model {

namespace {

void check_positive_inputs(double a, double m0, double V0) {
    if (!(a > 0.0)) throw std::domain_error("SystemParams: a must be positive");
    if (!(m0 > 0.0)) throw std::domain_error("SystemParams: m0 must be positive");
    if (!(V0 >= 0.0))
        throw std::domain_error("SystemParams: V0 must be non-negative");
}

SystemParams fill_derived(double a, double V0, double m0, double calV0) {
    if (calV0 > 0.25)
        throw std::domain_error(
            "SystemParams: calV0 = " + std::to_string(calV0) +
            " violates the bound-state condition calV0 <= 1/4");
    SystemParams p;
    p.a = a;
    p.V0 = V0;
    p.m0 = m0;
    p.delta = 2.0 * m0 / (a * a);
    p.calV0 = calV0;
    p.s = std::sqrt(0.25 - calV0);
    p.mu = 0.5 + p.s;
    p.nu = 1.5;
    p.tau = -0.5;
    return p;
}

void check_level(int n) {
    if (n < 0) throw std::domain_error("level index must be non-negative");
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

SystemParams derive_params(double a, double V0, double m0) {
    check_positive_inputs(a, m0, V0);
    const double delta = 2.0 * m0 / (a * a);
    return fill_derived(a, V0, m0, delta * V0);
}

SystemParams params_from_calv0(double calV0, double a, double m0) {
    check_positive_inputs(a, m0, 0.0);
    if (!(calV0 >= 0.0))
        throw std::domain_error("SystemParams: calV0 must be non-negative");
    const double delta = 2.0 * m0 / (a * a);
    return fill_derived(a, calV0 / delta, m0, calV0);
}

QuantumState energy(const SystemParams& p, int n) {
    check_level(n);
    QuantumState st;
    st.n = n;
    st.eps = 4.0 * (n + 1.0) * (n + 1.0 + p.s);
    st.energy = st.eps / p.delta;
    st.norm_sq = normalization_sq(p, n);
    return st;
}

HypParams hyp_params(const SystemParams& p, double eps) {
    const double radicand = eps + 0.25 - p.calV0;
    if (radicand < 0.0)
        throw std::domain_error("hyp_params: eps + 1/4 - calV0 must be >= 0");
    const double r = std::sqrt(radicand);
    const double half_sum = 0.5 * (p.mu + p.nu);
    return {half_sum - 0.5 * r, half_sum + 0.5 * r, p.mu + 0.5};
}

double normalization_sq(const SystemParams& p, int n) {
    check_level(n);
    return 2.0 * p.a * (p.mu + 1.5 + 2.0 * n) * (p.mu + 0.5 + n) / (n + 1.0);
}

double normalization_sq_gamma_form(const SystemParams& p, int n) {
    check_level(n);
    using specfun::log_gamma;
    using specfun::pochhammer;
    const double mu = p.mu;
    const double poch = pochhammer(mu + 0.5, n);
    const double gammas = std::exp(log_gamma(mu + 1.5 + n) +
                                   log_gamma(mu + 0.5 + n) -
                                   2.0 * log_gamma(mu + 0.5));
    return 2.0 * p.a * (mu + 1.5 + 2.0 * n) * gammas /
           ((1.0 + n) * poch * poch);
}

double wavefunction_x(const SystemParams& p, int n, double x) {
    check_level(n);
    if (!(x > 0.0))
        throw std::domain_error(
            "wavefunction_x: x must be positive (singular point at x = 0)");
    const double t = std::tanh(p.a * x);
    const double sech2 = 1.0 - t * t;
    // Hypergeometric form; the Jacobi <-> 2F1 conversion constant
    // (mu+1/2)_n / n! ties it to the normalization of the rho form.
    const double conv = specfun::pochhammer(p.mu + 0.5, n) / factorial(n);
    const double hyp = specfun::hyp2f1_terminating(-n, p.mu + p.nu + n,
                                                   p.mu + 0.5, t * t);
    return std::sqrt(normalization_sq(p, n)) * conv * std::pow(t, p.mu) *
           sech2 * hyp;
}

double wavefunction_rho(const SystemParams& p, int n, double rho) {
    check_level(n);
    if (!(rho > -1.0 && rho < 1.0))
        throw std::domain_error("wavefunction_rho: rho must lie in (-1, 1)");
    const double y = 0.5 * (1.0 - rho);   // tanh^2(a x)
    const double jac = specfun::jacobi_eval(
        specfun::JacobiParams(p.mu - 0.5, p.nu - 0.5, n), rho);
    return std::sqrt(normalization_sq(p, n)) * std::pow(y, 0.5 * p.mu) *
           0.5 * (1.0 + rho) * jac;
}

double wavefunction_dx(const SystemParams& p, int n, double x) {
    check_level(n);
    if (!(x > 0.0))
        throw std::domain_error("wavefunction_dx: x must be positive");
    const double mu = p.mu;
    const double t = std::tanh(p.a * x);
    const double c2 = 1.0 - t * t;
    const double rho = 1.0 - 2.0 * t * t;
    const specfun::JacobiParams jp(mu - 0.5, 1.0, n);
    const double P = specfun::jacobi_eval(jp, rho);
    const double P1 = specfun::jacobi_derivative(jp, rho);
    const double S = (mu - (mu + 2.0) * t * t) * P - 4.0 * t * t * c2 * P1;
    return std::sqrt(normalization_sq(p, n)) * p.a * std::pow(t, mu - 1.0) *
           c2 * S;
}

double wavefunction_d2x(const SystemParams& p, int n, double x) {
    check_level(n);
    if (!(x > 0.0))
        throw std::domain_error("wavefunction_d2x: x must be positive");
    const double mu = p.mu;
    const double t = std::tanh(p.a * x);
    const double t2 = t * t;
    const double c2 = 1.0 - t2;
    const double rho = 1.0 - 2.0 * t2;
    const specfun::JacobiParams jp(mu - 0.5, 1.0, n);
    const double P = specfun::jacobi_eval(jp, rho);
    const double P1 = specfun::jacobi_derivative(jp, rho);
    const double P2 = specfun::jacobi_derivative_k(jp, rho, 2);
    const double S = (mu - (mu + 2.0) * t2) * P - 4.0 * t2 * c2 * P1;
    const double dS = -2.0 * (mu + 2.0) * t * P -
                      (4.0 * (mu + 2.0) * t - 4.0 * (mu + 6.0) * t2 * t) * P1 +
                      16.0 * t2 * t * c2 * P2;
    return std::sqrt(normalization_sq(p, n)) * p.a * p.a * c2 *
           std::pow(t, mu - 2.0) *
           ((mu - 1.0) * c2 * S - 2.0 * t2 * S + t * c2 * dS);
}

} // namespace pdmf::model
