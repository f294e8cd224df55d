#pragma once

#include "bsc_exponents/scalar_functions.hpp"

// Scalar thresholds of the rate axis: the linear-programming distance
// omega_R with its optimizing (alpha_R, tau_R), the critical rates
// R_crit, R_1, R_2, R_min as functions of p, the universal constants
// (tau_0, R_0, p_0, p_1), and the parametric alpha-sweep used to trace the
// R_2 curve.

namespace bsc {

/// Solution of the LP-distance minimization at rate R:
/// omega_r = min over alpha in [delta_gv(R), 1/2] of G(alpha, tau_R(alpha))
/// subject to h2(alpha) - h2(tau) = 1 - R.
struct LpBoundPoint {
    double rate;
    double omega_r;
    double alpha_r;
    double tau_r;
};

/// The critical-rate set of a channel.
struct CriticalRates {
    double p;
    double capacity;
    double r_crit;
    double r1;
    double r2;
    double r_min;
};

/// Universal constants: tau0 solves
/// (1 - 2t)(1 + 1/(2 sqrt(t(1-t)))) = ln((1-t)/t),  r0 = h2(tau0),
/// p0 is the unique root of r2(p) = r1(p), p1 of r1(p) = r_crit(p).
struct GlobalConstants {
    double tau0;
    double r0;
    double p0;
    double p1;
};

/// One point of the alpha-parametrized trace: tau(alpha) is the stationarity
/// root below alpha, R = 1 - h2(alpha) + h2(tau), omega = G(alpha, tau), and
/// p is the channel with omega1(p) = omega (so r2(p) = R).
struct SweepPoint {
    double alpha;
    double tau;
    double rate;
    double omega;
    double p;
};

double capacity(const ChannelParam& ch);

/// R_crit(p) = 1 - h2(sqrt(p) / (sqrt(p) + sqrt(q))).
double r_crit(const ChannelParam& ch);

/// R_1(p) = h2(tau_1(p)), tau_1(p) = (1 - (4pq)^{1/4})^2 / (2 (1 + sqrt(4pq))).
double r1(const ChannelParam& ch);

/// R_2(p): the rate with omega_R = omega1(p), by bisection on R
/// (omega_R decreases strictly in R).
double r2(const ChannelParam& ch);

/// Independent formulation of R_2: 1 - max{h2(a) - h2(t) : G(a, t) = omega1(p)}.
/// Kept alongside r2 as a cross-check; the two agree to 1e-8.
double r2_max_form(const ChannelParam& ch);

/// R_min(p) = 1 - h2(omega1(p)); branch switch of the lower envelope.
double r_min(const ChannelParam& ch);

/// All five rates of a channel, computed once (r2 is the expensive one).
CriticalRates critical_rate_set(const ChannelParam& ch);

/// Computed once per process, thread-safe.
const GlobalConstants& global_constants();

/// Total derivative dG/dalpha along the constraint h2(alpha) - h2(tau) = 1 - R
/// (tau varies with alpha through the constraint).  Requires 0 < tau.
double dg_dalpha(double alpha, double tau);

/// The LP-distance point at rate R.  For R <= r0 the minimum sits at
/// alpha = 1/2 and has the closed form omega_R = 1/2 - sqrt(tau(1-tau)) with
/// tau = h2_inv(R); for R > r0 the interior stationary point is found by
/// bisection of dg_dalpha along the constraint.
LpBoundPoint omega_lp(double rate);

/// Inverse of omega1: the p with omega1(p) = omega, omega in [0, 1/2).
double omega1_inverse(double omega);

/// Trace point for a given alpha in (0, 1/2).
SweepPoint parametric_sweep(double alpha);

}  // namespace bsc
