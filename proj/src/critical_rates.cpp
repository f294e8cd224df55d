#include "bsc_exponents/critical_rates.hpp"

#include <cmath>

#include "bsc_exponents/rootfind.hpp"

namespace bsc {

namespace {

// tau induced on alpha by the rate constraint h2(alpha) - h2(tau) = 1 - R.
double tau_on_rate(double alpha, double rate) {
    double y = h2(alpha) - 1.0 + rate;
    if (y < 0.0) y = 0.0;
    return h2_inv(y);
}

// Defining equation of tau0 (natural logs; the only place they surface).
double tau0_residual(double tau) {
    const double s = std::sqrt(tau * (1.0 - tau));
    return (1.0 - 2.0 * tau) * (1.0 + 0.5 / s) - std::log((1.0 - tau) / tau);
}

double tau1_of(const ChannelParam& ch) {
    const double root4 = std::pow(4.0 * ch.p * ch.q, 0.25);
    return (1.0 - root4) * (1.0 - root4) / (2.0 * (1.0 + root4 * root4));
}

}  // namespace

double capacity(const ChannelParam& ch) {
    return 1.0 - h2(ch.p);
}

double r_crit(const ChannelParam& ch) {
    const double sp = std::sqrt(ch.p);
    return 1.0 - h2(sp / (sp + std::sqrt(ch.q)));
}

double r1(const ChannelParam& ch) {
    return h2(tau1_of(ch));
}

double r_min(const ChannelParam& ch) {
    return 1.0 - h2(omega1(ch));
}

double dg_dalpha(double alpha, double tau) {
    const double s = std::sqrt(tau * (1.0 - tau));
    const double dnm = 1.0 + 2.0 * s;
    const double one_m2a = 1.0 - 2.0 * alpha;
    const double bracket = 1.0 - (one_m2a / dnm) * (one_m2a / dnm);
    const double ratio = std::log((1.0 - alpha) / alpha) / std::log((1.0 - tau) / tau);
    return 2.0 * one_m2a / dnm - (1.0 - 2.0 * tau) / (2.0 * s) * bracket * ratio;
}

const GlobalConstants& global_constants() {
    static const GlobalConstants gc = [] {
        GlobalConstants c{};
        c.tau0 = bisect(tau0_residual, 1e-6, 0.2, {1e-15, 200});
        c.r0 = h2(c.tau0);
        // p0 = lim_{alpha -> 1/2} p(alpha): the channel whose omega1 equals
        // G(1/2, tau0).  (r2 - r1 vanishes identically for p >= p0, so that
        // difference has no sign change to bisect on.)
        c.p0 = omega1_inverse(g_func(0.5, c.tau0));
        c.p1 = bisect([](double p) { return r1(ChannelParam(p)) - r_crit(ChannelParam(p)); },
                      1e-3, 0.05, {1e-15, 200});
        return c;
    }();
    return gc;
}

LpBoundPoint omega_lp(double rate) {
    if (!(rate > 0.0) || !(rate < 1.0)) {
        throw std::domain_error("omega_lp: rate outside (0, 1)");
    }
    const GlobalConstants& gc = global_constants();
    if (rate <= gc.r0) {
        const double tau = h2_inv(rate);
        return LpBoundPoint{rate, 0.5 - std::sqrt(tau * (1.0 - tau)), 0.5, tau};
    }
    const double dgv = delta_gv(rate);
    auto slope = [rate](double alpha) {
        const double tau = tau_on_rate(alpha, rate);
        if (tau <= 0.0) return -1e300;  // alpha indistinguishable from delta_gv
        return dg_dalpha(alpha, tau);
    };
    const double hi = 0.5 - 1e-10;
    if (!(slope(hi) > 0.0)) {
        // rate indistinguishable from r0: the stationary point merges into
        // the alpha = 1/2 boundary.
        const double tau = tau_on_rate(0.5, rate);
        return LpBoundPoint{rate, g_func(0.5, tau), 0.5, tau};
    }
    // The slope is negative just above delta_gv, but for rates close to 1
    // the sign change sits arbitrarily near the boundary; shrink toward it
    // until the negative side is bracketed.
    double lo = dgv + 1e-10 * (0.5 - dgv);
    for (int i = 0; i < 80 && !(slope(lo) < 0.0); ++i) {
        lo = dgv + 0.25 * (lo - dgv);
        if (lo - dgv < 1e-18) {
            return LpBoundPoint{rate, g_func(dgv, 0.0), dgv, 0.0};
        }
    }
    const double alpha = bisect(slope, lo, hi, {1e-14, 200});
    const double tau = tau_on_rate(alpha, rate);
    return LpBoundPoint{rate, g_func(alpha, tau), alpha, tau};
}

double omega1_inverse(double omega) {
    if (!(omega >= 0.0) || !(omega < 0.5)) {
        throw std::domain_error("omega1_inverse: omega outside [0, 1/2)");
    }
    // Solves 2 sqrt(pq)/(1 + 2 sqrt(pq)) = w; the difference
    // 1 - w - sqrt(1 - 2w) is expanded as w^2 / (1 - w + sqrt(1 - 2w)) to
    // avoid cancellation for small w.
    const double root = std::sqrt(1.0 - 2.0 * omega);
    return omega * omega / (2.0 * (1.0 - omega) * (1.0 - omega + root));
}

double r2(const ChannelParam& ch) {
    const double target = omega1(ch);
    auto f = [&](double rate) { return omega_lp(rate).omega_r - target; };
    // omega_R decreases from 1/2 to 0 on (0, 1) and r2 < r_crit, so the
    // crossing is bracketed by [eps, r_crit].
    return bisect(f, 1e-9, r_crit(ch), {1e-13, 200});
}

double r2_max_form(const ChannelParam& ch) {
    const double w1 = omega1(ch);
    // Feasible alpha start: G(alpha, 0) = 2 alpha (1 - alpha) >= w1.
    const double alpha_lo = t1(w1) + 1e-9;
    auto tau_on_curve = [w1](double alpha) {
        return bisect([&](double tau) { return g_func(alpha, tau) - w1; }, 0.0, alpha,
                      {1e-15, 200});
    };
    auto objective = [&](double alpha) { return h2(alpha) - h2(tau_on_curve(alpha)); };

    constexpr int kGrid = 256;
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i <= kGrid; ++i) {
        const double alpha = alpha_lo + (0.5 - alpha_lo) * i / kGrid;
        const double val = objective(alpha);
        if (val > best) {
            best = val;
            best_i = i;
        }
    }
    const double step = (0.5 - alpha_lo) / kGrid;
    const double lo = alpha_lo + step * std::max(0, best_i - 1);
    const double hi = alpha_lo + step * std::min(kGrid, best_i + 1);
    const double alpha_star = golden_max(objective, lo, hi, 1e-12);
    return 1.0 - std::max(objective(alpha_star), best);
}

CriticalRates critical_rate_set(const ChannelParam& ch) {
    return CriticalRates{ch.p,   capacity(ch), r_crit(ch),
                         r1(ch), r2(ch),       r_min(ch)};
}

SweepPoint parametric_sweep(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 0.5)) {
        throw std::domain_error("parametric_sweep: alpha outside (0, 1/2)");
    }
    // The stationarity equation has the spurious root tau = alpha; the
    // meaningful one lies below it and the slope changes sign across it.
    // Near tau = alpha the slope re-approaches zero, so the upper bisection
    // endpoint is taken at the most positive point of a coarse scan rather
    // than at alpha itself (where the sign drowns in rounding noise for
    // alpha close to 1/2).
    auto slope = [alpha](double t) { return dg_dalpha(alpha, t); };
    const double eps = 1e-12;
    double hi = alpha - eps;
    double hi_val = slope(hi);
    for (int j = 1; j < 32; ++j) {
        const double t = alpha * j / 32.0;
        const double val = slope(t);
        if (val > hi_val) {
            hi = t;
            hi_val = val;
        }
    }
    if (!(hi_val > 0.0)) {
        throw ConvergenceError("parametric_sweep: no positive slope point below alpha");
    }
    const double tau = bisect(slope, eps, hi, {1e-15, 200});
    const double rate = 1.0 - h2(alpha) + h2(tau);
    const double omega = g_func(alpha, tau);
    return SweepPoint{alpha, tau, rate, omega, omega1_inverse(omega)};
}

}  // namespace bsc
