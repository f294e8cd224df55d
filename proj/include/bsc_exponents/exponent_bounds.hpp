#pragma once

#include <vector>

#include "bsc_exponents/critical_rates.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "bsc_exponents/spectrum_mu.hpp"

// Reliability-function envelopes for the BSC.  e_low is the classical
// random-coding / expurgated lower envelope, e_up the upper envelope built
// from the LP distance bound and the spectrum exponent mu.  The two
// coincide on [r2(p), capacity(p)]: the sphere-packing branch above r_crit
// and the straight line of slope -1 on [r2, r_crit].

namespace bsc {

enum class RegionTag { kBelowR2, kStraightLine, kSpherePacking };

/// Spec'd serialization names: below_R2, straight_line, sphere_packing.
const char* region_tag_name(RegionTag tag);

struct BoundCurveRow {
    double rate;
    double e_low;
    double e_up;
    RegionTag region;
};

/// Sampled (R, E_low, E_up) series for a fixed channel, with the seam rates
/// {r_min, r2, r_crit} inserted exactly.
struct BoundCurve {
    CriticalRates rates;
    std::vector<BoundCurveRow> rows;
};

/// Sphere-packing exponent D(delta_gv(R) || p), 0 <= R <= capacity.
double sphere_packing_exponent(double rate, const ChannelParam& ch);

/// Lower envelope: expurgated branch -delta_gv(R) log2(2 sqrt(pq)) up to
/// r_min, straight line 1 - log2(1 + 2 sqrt(pq)) - R up to r_crit,
/// sphere packing above.
double e_low(double rate, const ChannelParam& ch, const CriticalRates& rates);
double e_low(double rate, const ChannelParam& ch);

/// Upper envelope: sphere packing above r_crit, the straight line on
/// [r2, r_crit], and below r2 the union-bound value
/// 1 - R + min over alpha of { G/2 log2(1/(4pq)) - l_func(G) },
/// which for R <= r0 reduces to the alpha = 1/2 closed form.
double e_up(double rate, const ChannelParam& ch, const CriticalRates& rates);
double e_up(double rate, const ChannelParam& ch);

/// W(omega, alpha, R, p) = (omega/2) log2(1/(4pq)) - mu(R, alpha, omega),
/// evaluated through mu_closed (omega = 0 gives 0).
double w_func(const SpectrumArgs& args, const ChannelParam& ch);

/// General minimax upper bound on E(R, p):
/// min over alpha of max over delta <= G(alpha, tau) of
///   t(p,delta) log2(q/p) - log2 q - mu(R, alpha, delta) - u(t(p,delta), delta).
struct MinimaxDetail {
    double value;
    double alpha_star;
    double delta_star;
};
MinimaxDetail minimax_upper_bound_detail(double rate, const ChannelParam& ch);
double minimax_upper_bound(double rate, const ChannelParam& ch);

namespace detail {
/// Inner objective of the minimax bound at a fixed (alpha, delta).
double minimax_objective(double delta, double alpha, double rate, const ChannelParam& ch);
}  // namespace detail

/// Uniform rate grid on [0, capacity] (n_points >= 2) plus exact seam rows.
BoundCurve bound_curve(const ChannelParam& ch, int n_points);

}  // namespace bsc
