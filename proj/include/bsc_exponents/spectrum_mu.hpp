#pragma once

#include "bsc_exponents/scalar_functions.hpp"

// The spectrum exponent mu(R, alpha, omega): the guaranteed exponent of the
// number of codeword pairs at relative distance omega in a rate-R code,
// after reduction to constant weight alpha*n.
//
// Three independent realizations are provided and cross-checked in tests:
//   * mu_integral -- adaptive Simpson quadrature of the defining integral,
//   * mu_closed   -- the non-integral closed form (Euler substitution),
//   * mu_half     -- the dedicated alpha = 1/2 closed form.
// l_func is the boundary value: mu(R, alpha, G(alpha,tau)) = l_func(G) + R - 1.

namespace bsc {

/// Argument bundle (R, alpha, omega) with the induced tau.
/// Valid iff delta_gv(R) <= alpha <= 1/2 and 0 <= omega <= g_func(alpha, tau),
/// where tau = h2_inv(h2(alpha) - 1 + R).
struct SpectrumArgs {
    double rate;
    double alpha;
    double omega;
    double tau;

    /// Validates, computes tau, clamps boundary values within kBoundaryTol.
    /// Throws std::domain_error naming the violated invariant.
    static SpectrumArgs make(double rate, double alpha, double omega);
};

struct QuadratureResult {
    double value;
    double error_estimate;  // accumulated absolute error bound
    long evaluations;
    bool converged;  // false if the subdivision depth cap was hit
};

/// mu by adaptive Simpson quadrature on [0, omega/2]; target absolute
/// tolerance abs_tol on the returned value.  omega = 0 returns exactly 0
/// (empty integral, entropy terms cancel).  Throws std::domain_error if the
/// discriminant P^2 - 4Qy^2 drops below -1e-12 on the integration grid,
/// which happens only for omega beyond g_func(alpha, tau).
QuadratureResult mu_integral(const SpectrumArgs& args, double abs_tol = 1e-12);

/// mu by the closed-form representation.  Requires omega > 0 (the Euler
/// variable v divides by omega); callers use the limit value 0 at omega = 0.
double mu_closed(const SpectrumArgs& args);

/// Corrected closed form of mu(R, 1/2, omega), tau = h2_inv(R).
double mu_half(double rate, double omega);

/// L(w) = 2 h2(t1(w)) - w - (1-w) h2((2 t1(w) - w) / (2(1-w))) on [0, 1/2].
double l_func(double omega);

/// Closed-form d mu / d omega at interior omega (singular at omega = 2 alpha).
double mu_domega(const SpectrumArgs& args);

namespace detail {

// Unvalidated kernels used by the optimizers; (alpha, tau) need not come
// from a rate, omega must already lie in [0, g_func(alpha, tau)].
double mu_closed_raw(double alpha, double tau, double omega);
double mu_domega_raw(double alpha, double tau, double omega);

}  // namespace detail

}  // namespace bsc
