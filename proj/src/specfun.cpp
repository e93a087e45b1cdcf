#include "pdmfisher/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pdmf::specfun {

JacobiParams::JacobiParams(double alpha_, double beta_, int n_)
    : alpha(alpha_), beta(beta_), n(n_) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("JacobiParams: weight exponents must exceed -1");
    if (n < 0)
        throw std::domain_error("JacobiParams: degree must be non-negative");
}

namespace {

double clamp_to_unit_interval(double x) {
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("jacobi: argument " + std::to_string(x) +
                                " outside [-1,1]");
    return std::clamp(x, -1.0, 1.0);
}

// Stirling series on [threshold, inf); the Bernoulli tail below is
// < 2e-18 absolute once x >= 12.
constexpr double kShiftThreshold = 12.0;

double log_gamma_asymptotic(double x) {
    // B_{2k} / (2k (2k-1)) for k = 1..7
    static constexpr double c[7] = {
        1.0 / 12.0,     -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,
    };
    const double inv2 = 1.0 / (x * x);
    double series = c[6];
    for (int k = 5; k >= 0; --k) series = c[k] + series * inv2;
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    return (x - 0.5) * std::log(x) - x + half_log_two_pi + series / x;
}

double digamma_asymptotic(double x) {
    // B_{2k} / (2k) for k = 1..7
    static constexpr double c[7] = {
        1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double inv2 = 1.0 / (x * x);
    double series = c[6];
    for (int k = 5; k >= 0; --k) series = c[k] + series * inv2;
    return std::log(x) - 0.5 / x - series * inv2;
}

} // namespace

double jacobi_eval(const JacobiParams& p, double x) {
    x = clamp_to_unit_interval(x);
    if (p.n == 0) return 1.0;
    const double a = p.alpha, b = p.beta;
    double prev = 1.0;
    double cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= p.n; ++k) {
        // a+b > -2 keeps every factor below nonzero for k >= 2
        const double denom = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        const double c1 = (2.0 * k + a + b - 1.0) *
                          ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x +
                           a * a - b * b);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        const double next = (c1 * cur + c0 * prev) / denom;
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_derivative_k(const JacobiParams& p, double x, int k) {
    if (k < 0) throw std::domain_error("jacobi_derivative_k: negative order");
    if (k > p.n) return 0.0;
    double scale = 1.0;
    for (int j = 1; j <= k; ++j) scale *= (p.n + p.alpha + p.beta + j) / 2.0;
    return scale * jacobi_eval(JacobiParams(p.alpha + k, p.beta + k, p.n - k), x);
}

double jacobi_derivative(const JacobiParams& p, double x) {
    return jacobi_derivative_k(p, x, 1);
}

double hyp2f1_terminating(int neg_n, double b, double c, double x) {
    if (neg_n > 0)
        throw std::domain_error(
            "hyp2f1_terminating: first parameter must be a non-positive integer");
    const int n = -neg_n;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < n; ++k) {
        const double c_k = c + k;
        if (c_k == 0.0)
            throw std::domain_error(
                "hyp2f1_terminating: parameter c hits a pole before the series "
                "terminates");
        term *= (static_cast<double>(-n + k) * (b + k)) / (c_k * (k + 1)) * x;
        sum += term;
    }
    return sum;
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0");
    double shift = 0.0;
    double y = x;
    while (y < kShiftThreshold) {
        shift += std::log(y);
        y += 1.0;
    }
    return log_gamma_asymptotic(y) - shift;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: requires x > 0");
    double shift = 0.0;
    double y = x;
    while (y < kShiftThreshold) {
        shift += 1.0 / y;
        y += 1.0;
    }
    return digamma_asymptotic(y) - shift;
}

double harmonic(double x) {
    if (!(x > -1.0))
        throw std::domain_error("harmonic: requires x > -1");
    return digamma(x + 1.0) + euler_gamma;
}

double pochhammer(double x, int n) {
    if (n < 0)
        throw std::domain_error("pochhammer: requires n >= 0");
    // Direct product avoids the cancellation of a Gamma ratio for small n
    // and is the only option once x + k crosses zero.
    if (n <= 32 || x <= 0.0) {
        double prod = 1.0;
        for (int k = 0; k < n; ++k) prod *= x + k;
        return prod;
    }
    return std::exp(log_gamma(x + n) - log_gamma(x));
}

} // namespace pdmf::specfun
