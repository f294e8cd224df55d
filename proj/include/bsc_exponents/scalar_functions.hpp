#pragma once

#include <stdexcept>

// Elementary channel/code geometry:  binary entropy and its inverse, KL
// divergence, the Gilbert-Varshamov radius, the distance functional
// G(alpha, tau), sphere radii and the sphere-intersection exponents u and c.
//
// Conventions: all public values are in bits (log base 2); probabilities and
// relative distances are plain doubles.  Every function is pure and
// thread-safe.  Arguments within kBoundaryTol of a domain boundary are
// clamped to it, anything further out raises std::domain_error.

namespace bsc {

inline constexpr double kBoundaryTol = 1e-12;

/// Binary symmetric channel with crossover probability 0 < p < 1/2.
struct ChannelParam {
    double p;
    double q;  // 1 - p
    explicit ChannelParam(double crossover);
};

/// Code rate together with its Gilbert-Varshamov radius.
struct RatePoint {
    double rate;
    double delta;  // h2(delta) == 1 - rate, delta <= 1/2
    static RatePoint from_rate(double rate);
};

/// Constant weight alpha paired with an inner radius tau <= alpha.
struct AlphaTauPair {
    double alpha;
    double tau;
};

/// Binary entropy in bits; endpoints return 0 by continuous extension.
double h2(double x);

/// Inverse of h2 on [0, 1/2]; bisection, absolute tolerance 1e-14.
double h2_inv(double y);

/// Binary KL divergence D(x || y) in bits.  Requires 0 < y < 1.
double kl_div(double x, double y);

/// G(alpha, tau) = 2 [alpha(1-alpha) - tau(1-tau)] / (1 + 2 sqrt(tau(1-tau))),
/// for 0 <= tau <= alpha <= 1/2.
double g_func(double alpha, double tau);

/// Gilbert-Varshamov radius: the delta <= 1/2 with h2(delta) = 1 - rate.
double delta_gv(double rate);

/// Johnson-type radius t1(w) = (1 - sqrt(1 - 2w)) / 2.
double t1(double omega);

/// Elias radius t2(w, p) = w/2 + (1 - w) p.
double t2(double omega, const ChannelParam& ch);

/// Distance at which t1 and t2 cross: 2 sqrt(pq) / (1 + 2 sqrt(pq)).
/// Pairs at this relative distance dominate the decoding error of a
/// typical code.
double omega1(const ChannelParam& ch);

/// Exponent of the intersection of two spheres of radius t*n around words
/// at distance w*n:  u(t, w) = w + (1-w) h2((2t - w) / (2(1-w))).
/// Domain: w/2 <= t <= 1 - w/2, 0 <= w < 1.
double u_func(double t, double omega);

/// Pairwise ambiguity exponent c(w, t, p) = t log(q/p) - log q - u(t, w).
/// Minimized over t at the Elias radius t2(w, p), where it equals
/// (w/2) log(1/(4pq)).
double c_func(double omega, double t, const ChannelParam& ch);

/// Working radius min{t1(w), t2(w, p)}; switches branch at omega1(p).
double t_radius(double omega, const ChannelParam& ch);

}  // namespace bsc
