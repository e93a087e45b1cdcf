#pragma once

#include "pdmfisher/model.hpp"

// Information-theoretic quantities of the bound states: Fisher information
// (closed form for n <= 3, weighted quadrature for any n), position
// moments, momentum dispersion, Heisenberg and Cramer-Rao products.
// Naming convention for the Fisher pair follows I_rho = 4<x^2> and
// I_gamma = 4<p^2>; note that the usual position-space Fisher information
// is the second of these.

namespace pdmf::measures {

// One row of the summary table for a level n at width parameter a.
struct MeasureReport {
    int n = 0;
    double a = 1.0;
    double x_mean = 0.0;   // <x>
    double x2_mean = 0.0;  // <x^2>
    double dx = 0.0;       // sqrt(<x^2> - <x>^2)
    double p_mean = 0.0;   // identically zero for real bound states
    double p2_mean = 0.0;  // <p^2>
    double dp = 0.0;       // sqrt(<p^2>)
    double heisenberg = 0.0;      // dx*dp, >= 1/2 with hbar = 1
    double fisher_x = 0.0;        // I_F = 4 int (psi')^2 dx
    double i_rho = 0.0;           // 4 <x^2>
    double i_gamma = 0.0;         // 4 <p^2> (= fisher_x)
    double variance = 0.0;        // V = dx^2
    double cramer_rao_v = 0.0;    // I_F * V, >= 1
    double cramer_rao_prod = 0.0; // I_rho * I_gamma, >= 1
};

struct Options {
    double tol = 1e-11;    // adaptive-quadrature tolerance
    int jacobi_nodes = 64; // Gauss-Jacobi rule size (degree headroom to n ~ 30)
};

// I_F = 4 int_0^inf (psi_n')^2 dx by Gauss-Jacobi quadrature in rho. The
// integrand's (1-rho)^(mu-3/2) endpoint singularity is absorbed into the
// rule's weight, so the polynomial part is integrated exactly. Returns
// +infinity at the critical depth mu = 1/2, where the integral diverges.
double fisher_quadrature(const model::SystemParams& p, int n,
                         const Options& opt = {});

// Closed-form I_F for n in {0,1,2,3} as an explicit rational function of
// mu times the squared normalization. Rejects mu = 1/2 (the (2mu-1)
// denominator) and n > 3.
double fisher_closed_form(const model::SystemParams& p, int n);

// <x^power> for power in {1, 2}, by adaptive quadrature over
// y = tanh^2(a x).
double x_moment(const model::SystemParams& p, int n, int power,
                const Options& opt = {});

// Closed-form <x> for n in {0, 1, 2} in terms of harmonic numbers and the
// digamma function.
double x_mean_closed_form(const model::SystemParams& p, int n);

// <p^2> = I_F / 4 (integration by parts; boundary terms vanish for
// mu > 1/2).
double p2_mean(const model::SystemParams& p, int n, const Options& opt = {});

// <p^2> through the second-derivative route int psi (-psi'') dx;
// independent cross-check of the integration-by-parts identity.
double p2_mean_direct(const model::SystemParams& p, int n,
                      const Options& opt = {});

// Full summary row; <p> is asserted zero, not computed.
MeasureReport report(const model::SystemParams& p, int n,
                     const Options& opt = {});

} // namespace pdmf::measures
