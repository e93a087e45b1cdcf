#include "pdmfisher/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pdmf::tridiag {

namespace {

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

} // namespace

void ql_implicit(std::vector<double>& d, std::vector<double> e,
                 std::vector<double>* vec0) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    if (e.size() + 1 != d.size())
        throw std::invalid_argument("ql_implicit: offdiag must have size n-1");
    if (vec0 && vec0->size() != d.size())
        throw std::invalid_argument("ql_implicit: vec0 must have size n");
    e.push_back(0.0);

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("ql_implicit: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        // recover from a rotation underflow and restart the sweep
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (vec0) {
                        f = (*vec0)[i + 1];
                        (*vec0)[i + 1] = s * (*vec0)[i] + c * f;
                        (*vec0)[i] = c * (*vec0)[i] - s * f;
                    }
                }
                if (underflow && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // Sort ascending, carrying vec0 components along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return d[i] < d[j]; });
    std::vector<double> ds(n), vs;
    if (vec0) vs.resize(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[order[i]];
        if (vec0) vs[i] = (*vec0)[order[i]];
    }
    d = std::move(ds);
    if (vec0) *vec0 = std::move(vs);
}

int sturm_count(const SymTridiagonal& t, double x) {
    const std::size_t n = t.size();
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = t.diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (q == 0.0) q = tiny;
        q = t.diag[i] - x - t.offdiag[i - 1] * t.offdiag[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k) {
    const int n = static_cast<int>(t.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("lowest_eigenvalues: bad eigenvalue count");

    // Gershgorin bounds.
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 210; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (sturm_count(t, mid) <= j)
                a = mid;
            else
                b = mid;
            if (b - a <= 4.0 * eps * std::max({1.0, std::abs(a), std::abs(b)}))
                break;
        }
        out[j] = 0.5 * (a + b);
        lo = out[j];  // eigenvalues come out ascending; shrink the bracket
    }
    return out;
}

namespace {

// Solve (T - lambda I) x = b, LU with partial pivoting (dgtsv-style;
// pivoting fills in one extra superdiagonal). b is overwritten by x.
void solve_shifted(const SymTridiagonal& t, double lambda, double pert,
                   std::vector<double>& b) {
    const int n = static_cast<int>(t.size());
    std::vector<double> dl(std::max(0, n - 1)), du(std::max(0, n - 1));
    std::vector<double> dd(n), du2(std::max(0, n - 1), 0.0);
    for (int i = 0; i < n; ++i) dd[i] = t.diag[i] - lambda + pert;
    for (int i = 0; i + 1 < n; ++i) dl[i] = du[i] = t.offdiag[i];

    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (dd[i] == 0.0) dd[i] = pert;
            const double fact = dl[i] / dd[i];
            dd[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            du2[i] = 0.0;
        } else {
            const double fact = dd[i] / dl[i];
            dd[i] = dl[i];
            const double temp = dd[i + 1];
            dd[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            const double bt = b[i];
            b[i] = b[i + 1];
            b[i + 1] = bt - fact * b[i + 1];
        }
    }
    if (dd[n - 1] == 0.0) dd[n - 1] = pert;

    b[n - 1] /= dd[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / dd[n - 2];
    for (int i = n - 3; i >= 0; --i)
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / dd[i];
}

} // namespace

std::vector<double> eigenvector(const SymTridiagonal& t, double lambda) {
    const int n = static_cast<int>(t.size());
    if (n == 0) return {};

    // Keep the shifted matrix nonsingular.
    double scale = std::abs(lambda);
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(t.diag[i]));
    const double pert = scale * std::numeric_limits<double>::epsilon() * 8.0;

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int sweep = 0; sweep < 3; ++sweep) {
        solve_shifted(t, lambda, pert, v);
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("eigenvector: inverse iteration failed");
        for (double& x : v) x /= norm;
    }
    if (v[0] < 0.0)
        for (double& x : v) x = -x;
    return v;
}

} // namespace pdmf::tridiag
