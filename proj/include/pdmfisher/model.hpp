#pragma once

// The solvable system: a particle with solitonic mass profile
// m(x) = m0 sech^2(a x) in the attractive singular well
// V(x) = -V0 csch^2(a x), restricted to x > 0. Bound states exist for
// dimensionless depth calV0 = delta*V0 <= 1/4 (delta = 2 m0 / a^2) and are
// Jacobi polynomials in rho = 1 - 2 tanh^2(a x).

namespace pdmf::model {

struct SystemParams {
    double a;      // mass-profile inverse width, > 0
    double V0;     // potential depth, >= 0
    double m0;     // mass scale, > 0
    double delta;  // 2 m0 / a^2
    double calV0;  // delta * V0, <= 1/4 for bound states
    double mu;     // 1/2 + sqrt(1 - 4 calV0)/2, in (1/2, 1] on the bound branch
    double nu;     // 3/2
    double s;      // sqrt(1/4 - calV0)
    double tau;    // -1/2
};

// Derive the dimensionless parameter set from physical inputs. Rejects
// depths that violate the bound-state condition calV0 <= 1/4.
SystemParams derive_params(double a, double V0, double m0 = 1.0);

// Same system specified through the dimensionless depth directly
// (V0 = calV0 * a^2 / (2 m0)).
SystemParams params_from_calv0(double calV0, double a, double m0 = 1.0);

struct QuantumState {
    int n;
    double eps;      // dimensionless energy, 4(n+1)(n+1+s)
    double energy;   // physical energy eps/delta
    double norm_sq;  // squared normalization constant, units of a
};

QuantumState energy(const SystemParams& p, int n);

// Hypergeometric parameters of the radial solution at dimensionless
// energy eps; at eps = eps_n the first parameter equals -n (the
// quantization condition).
struct HypParams {
    double a_h;
    double b_h;
    double c_h;
};

HypParams hyp_params(const SystemParams& p, double eps);

// Squared normalization constant, 2a (mu+3/2+2n)(mu+1/2+n)/(n+1).
// Normalizes the bound state to unit probability on (0, inf).
double normalization_sq(const SystemParams& p, int n);

// The same constant through its Gamma-ratio representation (kept as an
// independent algebraic route; the two must agree to rounding).
double normalization_sq_gamma_form(const SystemParams& p, int n);

// psi_n(x) for x > 0, through the terminating-hypergeometric form.
double wavefunction_x(const SystemParams& p, int n, double x);

// psi_n as a function of rho = 1 - 2 tanh^2(a x) on (-1, 1), through the
// Jacobi-polynomial form. Pointwise identical to wavefunction_x.
double wavefunction_rho(const SystemParams& p, int n, double rho);

// Analytic first and second x-derivatives of the bound state.
double wavefunction_dx(const SystemParams& p, int n, double x);
double wavefunction_d2x(const SystemParams& p, int n, double x);

} // namespace pdmf::model
