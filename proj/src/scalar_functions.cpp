#include "bsc_exponents/scalar_functions.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace bsc {

namespace {

// Clamp x into [lo, hi] when it is within kBoundaryTol of the range,
// otherwise reject.  Downstream solvers probe boundaries, so exact-edge
// inputs must not throw.
double checked(double x, double lo, double hi, const char* what) {
    if (x < lo) {
        if (x >= lo - kBoundaryTol) return lo;
    } else if (x > hi) {
        if (x <= hi + kBoundaryTol) return hi;
    } else {
        return x;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: %.17g outside [%.17g, %.17g]", what, x, lo, hi);
    throw std::domain_error(buf);
}

double xlog2x(double x) {
    return x == 0.0 ? 0.0 : x * std::log2(x);
}

}  // namespace

ChannelParam::ChannelParam(double crossover) : p(crossover), q(1.0 - crossover) {
    if (!(crossover > 0.0) || !(crossover < 0.5)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "ChannelParam: p = %.17g not in (0, 1/2)", crossover);
        throw std::domain_error(buf);
    }
}

RatePoint RatePoint::from_rate(double rate) {
    rate = checked(rate, 0.0, 1.0, "RatePoint: rate");
    return RatePoint{rate, delta_gv(rate)};
}

double h2(double x) {
    x = checked(x, 0.0, 1.0, "h2: x");
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double h2_inv(double y) {
    y = checked(y, 0.0, 1.0, "h2_inv: y");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double kl_div(double x, double y) {
    x = checked(x, 0.0, 1.0, "kl_div: x");
    if (!(y > kBoundaryTol) || !(y < 1.0 - kBoundaryTol)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "kl_div: y = %.17g must lie strictly inside (0, 1)", y);
        throw std::domain_error(buf);
    }
    double d = 0.0;
    if (x > 0.0) d += x * std::log2(x / y);
    if (x < 1.0) d += (1.0 - x) * std::log2((1.0 - x) / (1.0 - y));
    return d;
}

double g_func(double alpha, double tau) {
    alpha = checked(alpha, 0.0, 0.5, "g_func: alpha");
    tau = checked(tau, 0.0, alpha, "g_func: tau");
    const double s = std::sqrt(tau * (1.0 - tau));
    return 2.0 * (alpha * (1.0 - alpha) - tau * (1.0 - tau)) / (1.0 + 2.0 * s);
}

double delta_gv(double rate) {
    rate = checked(rate, 0.0, 1.0, "delta_gv: rate");
    return h2_inv(1.0 - rate);
}

double t1(double omega) {
    omega = checked(omega, 0.0, 0.5, "t1: omega");
    // (1 - sqrt(1-2w))/2 rationalized; exact at both endpoints.
    return omega / (1.0 + std::sqrt(1.0 - 2.0 * omega));
}

double t2(double omega, const ChannelParam& ch) {
    omega = checked(omega, 0.0, 1.0, "t2: omega");
    return 0.5 * omega + (1.0 - omega) * ch.p;
}

double omega1(const ChannelParam& ch) {
    const double r = 2.0 * std::sqrt(ch.p * ch.q);
    return r / (1.0 + r);
}

double u_func(double t, double omega) {
    omega = checked(omega, 0.0, 1.0 - kBoundaryTol, "u_func: omega");
    t = checked(t, 0.5 * omega, 1.0 - 0.5 * omega, "u_func: t");
    const double inner = (2.0 * t - omega) / (2.0 * (1.0 - omega));
    return omega + (1.0 - omega) * h2(inner);
}

double c_func(double omega, double t, const ChannelParam& ch) {
    return t * std::log2(ch.q / ch.p) - std::log2(ch.q) - u_func(t, omega);
}

double t_radius(double omega, const ChannelParam& ch) {
    omega = checked(omega, 0.0, 0.5, "t_radius: omega");
    return std::min(t1(omega), t2(omega, ch));
}

}  // namespace bsc
