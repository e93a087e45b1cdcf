#include "pdmfisher/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdmfisher/quadrature.hpp"
#include "pdmfisher/specfun.hpp"

namespace pdmf::measures {

namespace {

using model::SystemParams;
using specfun::JacobiParams;

void check_level(int n) {
    if (n < 0) throw std::domain_error("level index must be non-negative");
}

// Bracket of the Fisher integrand in rho: the derivative expansion
//   B(rho) = (3+2n+2mu)(rho^2-1) P_{n-1}^{(mu+1/2,2)}(rho)
//          + 2 [2(rho-1) + mu(rho+1)] P_n^{(mu-1/2,1)}(rho),
// with P_{-1} == 0, so that
//   I_F = N_n^2 (a/16) int_{-1}^{1} B^2 ((1+rho)/2) ((1-rho)/2)^(mu-3/2) drho.
double fisher_bracket(double mu, int n, double rho) {
    double lowered = 0.0;
    if (n >= 1)
        lowered = (3.0 + 2.0 * n + 2.0 * mu) * (rho * rho - 1.0) *
                  specfun::jacobi_eval(JacobiParams(mu + 0.5, 2.0, n - 1), rho);
    const double direct =
        2.0 * (2.0 * (rho - 1.0) + mu * (rho + 1.0)) *
        specfun::jacobi_eval(JacobiParams(mu - 0.5, 1.0, n), rho);
    return lowered + direct;
}

// Closed-form I_F / (a * N_n^2) for n <= 3: exact rational functions of mu
// obtained by expanding B^2 and integrating term by term against the
// weight (moment integrals 1/((mu-1/2+k)(mu+1/2+k))).
double fisher_rational_factor(double mu, int n) {
    switch (n) {
        case 0:
            return 32.0 * (2.0 * mu * mu + 4.0 * mu - 1.0) /
                   ((2.0 * mu - 1.0) * (2.0 * mu + 1.0) * (2.0 * mu + 3.0) *
                    (2.0 * mu + 5.0));
        case 1:
            return 128.0 * ((8.0 * mu + 52.0) * mu * mu + 68.0 * mu - 33.0) /
                   ((2.0 * mu - 1.0) * (2.0 * mu + 3.0) * (2.0 * mu + 5.0) *
                    (2.0 * mu + 7.0) * (2.0 * mu + 9.0));
        case 2:
            return 288.0 * ((12.0 * mu + 126.0) * mu * mu + 294.0 * mu - 145.0) /
                   ((2.0 * mu - 1.0) * (2.0 * mu + 5.0) * (2.0 * mu + 9.0) *
                    (2.0 * mu + 11.0) * (2.0 * mu + 13.0));
        case 3:
            return 512.0 * ((16.0 * mu + 232.0) * mu * mu + 776.0 * mu - 385.0) /
                   ((2.0 * mu - 1.0) * (2.0 * mu + 7.0) * (2.0 * mu + 13.0) *
                    (2.0 * mu + 15.0) * (2.0 * mu + 17.0));
        default:
            throw std::domain_error(
                "fisher_closed_form: closed forms exist for n <= 3 only");
    }
}

// atanh(sqrt(1-w)) computed stably for small w.
double atanh_sqrt_one_minus(double w) {
    const double root = std::sqrt(1.0 - w);
    return std::log1p(root) - 0.5 * std::log(w);
}

// Dimensionless moment integral
//   J_p(n) = int_0^1 atanh(sqrt(y))^p y^(mu-1/2) (1-y) P_n(1-2y)^2 dy,
// split at y = 1/2: y = v^2 on the left smooths the y^(mu-1/2) endpoint,
// y = 1 - exp(-u) on the right tames the logarithmic atanh growth.
double moment_integral(const SystemParams& p, int n, int power, double tol) {
    const double mu = p.mu;
    const JacobiParams jp(mu - 0.5, 1.0, n);

    const auto left = quadrature::integrate_adaptive(
        [&](double v) {
            const double jac = specfun::jacobi_eval(jp, 1.0 - 2.0 * v * v);
            return 2.0 * std::pow(std::atanh(v), power) *
                   std::pow(v, 2.0 * mu) * (1.0 - v * v) * jac * jac;
        },
        0.0, 1.0 / std::sqrt(2.0), tol / 2.0);

    // Integrand decays like u^power exp(-2u); u = 40 leaves a tail
    // below 1e-30.
    const auto right = quadrature::integrate_adaptive(
        [&](double u) {
            const double w = std::exp(-u);  // 1 - y
            const double y = 1.0 - w;
            const double jac = specfun::jacobi_eval(jp, 2.0 * w - 1.0);
            return std::pow(atanh_sqrt_one_minus(w), power) *
                   std::pow(y, mu - 0.5) * jac * jac * w * w;
        },
        std::log(2.0), 40.0, tol / 2.0);

    return left.value + right.value;
}

} // namespace

double fisher_quadrature(const SystemParams& p, int n, const Options& opt) {
    check_level(n);
    if (p.s == 0.0) {
        // mu = 1/2: psi' ~ x^(-1/2) at the origin and the integral diverges.
        return std::numeric_limits<double>::infinity();
    }
    const double mu = p.mu;
    const auto rule =
        quadrature::gauss_jacobi_rule(mu - 1.5, 1.0, opt.jacobi_nodes);
    // B^2 is a polynomial of degree 2n+2: exact under the rule.
    const double sum =
        rule.integrate([&](double rho) {
            const double b = fisher_bracket(mu, n, rho);
            return b * b;
        });
    const double base = (model::normalization_sq(p, n) / p.a) / 16.0 *
                        std::pow(2.0, 0.5 - mu) * sum;
    return base * p.a * p.a;
}

double fisher_closed_form(const SystemParams& p, int n) {
    check_level(n);
    if (p.s == 0.0)
        throw std::domain_error(
            "fisher_closed_form: mu = 1/2 makes the (2mu-1) factor vanish "
            "(Fisher information diverges at the critical depth)");
    const double value =
        p.a * model::normalization_sq(p, n) * fisher_rational_factor(p.mu, n);
    if (!(value > 0.0))
        throw std::runtime_error("fisher_closed_form: non-positive result");
    return value;
}

double x_moment(const SystemParams& p, int n, int power, const Options& opt) {
    check_level(n);
    if (power != 1 && power != 2)
        throw std::invalid_argument("x_moment: power must be 1 or 2");
    const double j = moment_integral(p, n, power, opt.tol);
    // All a-dependence is the explicit prefactor: <x^k> ~ a^-k.
    const double unit_norm = model::normalization_sq(p, n) / p.a;
    return unit_norm * j / (2.0 * std::pow(p.a, power));
}

double x_mean_closed_form(const SystemParams& p, int n) {
    check_level(n);
    if (n > 2)
        throw std::domain_error("x_mean_closed_form: closed forms exist for n <= 2");
    const double mu = p.mu;
    const double a = p.a;
    const double h_mu = specfun::harmonic(mu);
    const double log2 = std::log(2.0);
    const double log16 = std::log(16.0);
    switch (n) {
        case 0:
            return (mu + 0.5) * (mu + 1.5) *
                   (2.0 * (mu + 1.0) * h_mu + mu * (log16 - 2.0) - 1.0 + log16) /
                   (a * (mu + 1.0) * (2.0 * mu + 1.0) * (2.0 * mu + 3.0));
        case 1: {
            const double prod = (mu + 1.0) * (mu + 2.0) * (mu + 3.0);
            return (8.0 * prod * h_mu -
                    ((12.0 * mu + 52.0) * mu + 43.0) * mu +
                    16.0 * prod * log2 + 18.0) /
                   (16.0 * a * prod);
        }
        default: {
            const double prod = (mu + 1.0) * (mu + 2.0) * (mu + 3.0) *
                                (mu + 4.0) * (mu + 5.0);
            const double poly =
                ((((-176.0 * mu - 2208.0) * mu - 9488.0) * mu - 15192.0) * mu -
                 3467.0) * mu + 6735.0;
            return (poly + 96.0 * specfun::euler_gamma * prod +
                    192.0 * prod * log2 + 96.0 * prod * specfun::digamma(mu + 1.0)) /
                   (192.0 * a * prod);
        }
    }
}

double p2_mean(const SystemParams& p, int n, const Options& opt) {
    return 0.25 * fisher_quadrature(p, n, opt);
}

double p2_mean_direct(const SystemParams& p, int n, const Options& opt) {
    check_level(n);
    // -psi psi'' ~ x^(2 mu - 2) at the origin: integrable for mu > 1/2.
    const auto r = quadrature::integrate_semi_infinite(
        [&](double x) {
            return -model::wavefunction_x(p, n, x) *
                   model::wavefunction_d2x(p, n, x);
        },
        opt.tol);
    return r.value;
}

MeasureReport report(const SystemParams& p, int n, const Options& opt) {
    check_level(n);
    MeasureReport r;
    r.n = n;
    r.a = p.a;
    r.x_mean = x_moment(p, n, 1, opt);
    r.x2_mean = x_moment(p, n, 2, opt);
    r.variance = r.x2_mean - r.x_mean * r.x_mean;
    r.dx = std::sqrt(r.variance);
    r.fisher_x = fisher_quadrature(p, n, opt);
    r.p_mean = 0.0;
    r.p2_mean = 0.25 * r.fisher_x;
    r.dp = std::sqrt(r.p2_mean);
    r.heisenberg = r.dx * r.dp;
    r.i_rho = 4.0 * r.x2_mean;
    r.i_gamma = 4.0 * r.p2_mean;
    r.cramer_rao_v = r.fisher_x * r.variance;
    r.cramer_rao_prod = r.i_rho * r.i_gamma;
    return r;
}

} // namespace pdmf::measures
