#include "pdmfisher/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "pdmfisher/specfun.hpp"
#include "pdmfisher/tridiagonal.hpp"

namespace pdmf::quadrature {

double QuadratureRule::integrate(const Integrand& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
}

QuadratureRule gauss_jacobi_rule(double alpha, double beta, int n_points) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error(
            "gauss_jacobi_rule: weight exponents must exceed -1 (integrability)");
    if (n_points < 1)
        throw std::invalid_argument("gauss_jacobi_rule: need at least one node");

    // Three-term recurrence coefficients of the monic-normalized Jacobi
    // matrix plus the zeroth weight moment 2^(a+b+1) B(a+1, b+1).
    const double ab = alpha + beta;
    const double zeroth_moment =
        std::exp((ab + 1.0) * std::log(2.0) + specfun::log_gamma(alpha + 1.0) +
                 specfun::log_gamma(beta + 1.0) - specfun::log_gamma(ab + 2.0));

    std::vector<double> diag(n_points), off(std::max(0, n_points - 1));
    diag[0] = (beta - alpha) / (ab + 2.0);
    if (n_points > 1)
        off[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                           ((ab + 3.0) * (ab + 2.0) * (ab + 2.0)));
    for (int i = 2; i <= n_points; ++i) {
        const double q = 2.0 * i + ab;
        diag[i - 1] = (beta * beta - alpha * alpha) / ((q - 2.0) * q);
        if (i < n_points)
            off[i - 1] = std::sqrt(4.0 * i * (i + alpha) * (i + beta) * (i + ab) /
                                   ((q * q - 1.0) * q * q));
    }

    std::vector<double> first_components(n_points, 0.0);
    first_components[0] = 1.0;
    tridiag::ql_implicit(diag, off, &first_components);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes = std::move(diag);
    rule.weights.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        rule.weights[i] =
            zeroth_moment * first_components[i] * first_components[i];
    return rule;
}

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1,1].
constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double lo, hi;
    double value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f_mid = f(mid);
    double k = kron_weights[7] * f_mid;
    double g = gauss_weights[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kron_nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k += kron_weights[i] * fsum;
        if (i % 2 == 1) g += gauss_weights[i / 2] * fsum;
    }
    k *= half;
    g *= half;
    if (!std::isfinite(k))
        throw std::runtime_error(
            "integrate_adaptive: integrand is not finite inside the interval");
    return {lo, hi, k, std::abs(k - g)};
}

} // namespace

IntegralResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                  double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
    if (lo == hi) return {0.0, 0.0};

    constexpr int max_segments = 4000;
    const double min_width =
        std::abs(hi - lo) * 1e-15;  // stop bisecting below float resolution

    std::priority_queue<Segment> active;
    active.push(gauss_kronrod(f, lo, hi));
    double total = active.top().value;
    double total_err = active.top().err;
    double settled_value = 0.0;   // segments too narrow to split further
    double settled_err = 0.0;
    int n_segments = 1;

    auto target = [&] {
        return std::max(tol * std::abs(total + settled_value), tol);
    };

    while (total_err + settled_err > target() && !active.empty()) {
        const Segment worst = active.top();
        active.pop();
        total -= worst.value;
        total_err -= worst.err;
        if (worst.hi - worst.lo < min_width) {
            settled_value += worst.value;
            settled_err += worst.err;
            continue;
        }
        if (++n_segments > max_segments)
            throw std::runtime_error(
                "integrate_adaptive: no convergence within the subdivision "
                "budget (error estimate " +
                std::to_string(total_err + settled_err) + ")");
        const double mid = 0.5 * (worst.lo + worst.hi);
        for (const Segment& s :
             {gauss_kronrod(f, worst.lo, mid), gauss_kronrod(f, mid, worst.hi)}) {
            total += s.value;
            total_err += s.err;
            active.push(s);
        }
    }
    const double err = total_err + settled_err;
    if (err > target())
        throw std::runtime_error(
            "integrate_adaptive: residual error estimate " + std::to_string(err) +
            " exceeds the requested tolerance");
    return {total + settled_value, err};
}

IntegralResult integrate_semi_infinite(const Integrand& f, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument(
            "integrate_semi_infinite: tolerance must be positive");
    const double piece_tol = tol / 4.0;

    // x = artanh(sqrt(y)).  Left half y in (0, 1/2] via y = v^2:
    //   integrand f(artanh(v)) / (1 - v^2), v in (0, 1/sqrt(2)].
    const IntegralResult left = integrate_adaptive(
        [&](double v) { return f(std::atanh(v)) / (1.0 - v * v); }, 0.0,
        1.0 / std::sqrt(2.0), piece_tol);

    // Right half y in [1/2, 1) via y = 1 - exp(-u):
    //   integrand f(x(u)) / (2 sqrt(1 - exp(-u))), u in [ln 2, inf).
    // x(u) = ln1p(sqrt(1-w)) - ln(w)/2 with w = exp(-u) stays accurate as
    // w underflows toward the endpoint.
    const auto right_integrand = [&](double u) {
        const double w = std::exp(-u);
        const double root = std::sqrt(1.0 - w);
        const double x = std::log1p(root) - 0.5 * std::log(w);
        return f(x) / (2.0 * root);
    };

    // Exponential decay in u; extend block-wise until the tail is
    // negligible. The cap covers decay rates down to exp(-x/20) at
    // tolerance 1e-12 before giving up loudly.
    IntegralResult right;
    double u0 = std::log(2.0);
    constexpr double block = 12.0;
    constexpr int max_blocks = 160;
    for (int i = 0; i < max_blocks; ++i) {
        const IntegralResult chunk =
            integrate_adaptive(right_integrand, u0, u0 + block, piece_tol);
        right.value += chunk.value;
        right.error_estimate += chunk.error_estimate;
        u0 += block;
        const double scale =
            std::max(std::abs(left.value + right.value), 1.0) * tol;
        if (std::abs(chunk.value) < 0.01 * scale) break;
        if (i + 1 == max_blocks)
            throw std::runtime_error(
                "integrate_semi_infinite: integrand does not decay fast enough");
    }

    return {left.value + right.value,
            left.error_estimate + right.error_estimate};
}

} // namespace pdmf::quadrature
