#include "bsc_exponents/exponent_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bsc_exponents/parallel.hpp"
#include "bsc_exponents/rootfind.hpp"

namespace bsc {

namespace {

double log2_inv_4pq(const ChannelParam& ch) {
    return -(2.0 + std::log2(ch.p) + std::log2(ch.q));
}

double straight_line(double rate, const ChannelParam& ch) {
    return 1.0 - std::log2(1.0 + 2.0 * std::sqrt(ch.p * ch.q)) - rate;
}

// Union-bound gain at pair distance w: (w/2) log2(1/(4pq)) - l_func(w).
// Decreasing below omega1(p), increasing above it.
double pair_gain(double omega, double l4pq) {
    return 0.5 * omega * l4pq - l_func(omega);
}

double tau_on_rate(double alpha, double rate) {
    double y = h2(alpha) - 1.0 + rate;
    if (y < 0.0) y = 0.0;
    return h2_inv(y);
}

double checked_rate(double rate, double cap, const char* who) {
    if (rate < 0.0 || rate > cap) {
        if (rate >= -kBoundaryTol && rate <= cap + kBoundaryTol) {
            return std::min(std::max(rate, 0.0), cap);
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s: rate = %.17g outside [0, capacity = %.17g]", who,
                      rate, cap);
        throw std::domain_error(buf);
    }
    return rate;
}

}  // namespace

const char* region_tag_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::kBelowR2: return "below_R2";
        case RegionTag::kStraightLine: return "straight_line";
        case RegionTag::kSpherePacking: return "sphere_packing";
    }
    return "?";
}

double sphere_packing_exponent(double rate, const ChannelParam& ch) {
    rate = checked_rate(rate, capacity(ch), "sphere_packing_exponent");
    return kl_div(delta_gv(rate), ch.p);
}

double e_low(double rate, const ChannelParam& ch, const CriticalRates& rates) {
    rate = checked_rate(rate, rates.capacity, "e_low");
    if (rate <= rates.r_min) {
        return -delta_gv(rate) * (1.0 + 0.5 * (std::log2(ch.p) + std::log2(ch.q)));
    }
    if (rate <= rates.r_crit) return straight_line(rate, ch);
    return sphere_packing_exponent(rate, ch);
}

double e_low(double rate, const ChannelParam& ch) {
    // e_low needs only the cheap seams; avoid the r2 solve.
    CriticalRates rates{ch.p, capacity(ch), r_crit(ch), 0.0, 0.0, r_min(ch)};
    return e_low(rate, ch, rates);
}

double e_up(double rate, const ChannelParam& ch, const CriticalRates& rates) {
    rate = checked_rate(rate, rates.capacity, "e_up");
    if (rate >= rates.r_crit) return sphere_packing_exponent(rate, ch);
    if (rate >= rates.r2) return straight_line(rate, ch);

    const double l4pq = log2_inv_4pq(ch);
    if (rate == 0.0) return 0.25 * l4pq;  // omega_R = 1/2, tau = 0 limit

    const GlobalConstants& gc = global_constants();
    if (rate <= gc.r0) {
        // alpha = 1/2 is optimal; closed form through the half-weight identity.
        const double tau = h2_inv(rate);
        const double omega = 0.5 - std::sqrt(tau * (1.0 - tau));
        return 0.5 * omega * l4pq - h2(tau) - h2(omega) + 1.0;
    }

    // Interior region: minimize the pair gain over the admissible alpha range.
    auto gain = [&](double alpha) {
        return pair_gain(g_func(alpha, tau_on_rate(alpha, rate)), l4pq);
    };
    const double dgv = delta_gv(rate);
    constexpr int kGrid = 200;
    double best = gain(0.5);
    int best_i = kGrid;
    for (int i = 0; i < kGrid; ++i) {
        const double alpha = dgv + (0.5 - dgv) * i / kGrid;
        const double val = gain(alpha);
        if (val < best) {
            best = val;
            best_i = i;
        }
    }
    const double step = (0.5 - dgv) / kGrid;
    const double lo = dgv + step * std::max(0, best_i - 1);
    const double hi = dgv + step * std::min(kGrid, best_i + 1);
    const double alpha_star = golden_min(gain, lo, hi, 1e-10);
    return 1.0 - rate + std::min(gain(alpha_star), best);
}

double e_up(double rate, const ChannelParam& ch) {
    return e_up(rate, ch, critical_rate_set(ch));
}

double w_func(const SpectrumArgs& args, const ChannelParam& ch) {
    if (args.omega <= 0.0) return 0.0;
    return 0.5 * args.omega * log2_inv_4pq(ch) - mu_closed(args);
}

namespace detail {

double minimax_objective(double delta, double alpha, double rate, const ChannelParam& ch) {
    const double tau = tau_on_rate(alpha, rate);
    if (delta <= 0.0) return -std::log2(ch.q);
    const double t = t_radius(delta, ch);
    const double mu = mu_closed_raw(alpha, tau, delta);
    return c_func(delta, t, ch) - mu;
}

}  // namespace detail

MinimaxDetail minimax_upper_bound_detail(double rate, const ChannelParam& ch) {
    const double cap = capacity(ch);
    if (!(rate >= 0.0) || !(rate < cap)) {
        throw std::domain_error("minimax_upper_bound: rate outside [0, capacity)");
    }
    const double dgv = delta_gv(rate);

    auto inner_max = [&](double alpha) {
        const double tau = tau_on_rate(alpha, rate);
        const double g = g_func(alpha, tau);
        auto obj = [&](double delta) { return detail::minimax_objective(delta, alpha, rate, ch); };
        constexpr int kGrid = 128;
        double best = obj(0.0);  // delta -> 0 limit, -log2 q
        double best_delta = 0.0;
        int best_i = 0;
        for (int i = 1; i <= kGrid; ++i) {
            const double delta = g * i / kGrid;
            const double val = obj(delta);
            if (val > best) {
                best = val;
                best_delta = delta;
                best_i = i;
            }
        }
        if (best_i > 0) {
            const double lo = g * std::max(0, best_i - 1) / kGrid;
            const double hi = g * std::min(kGrid, best_i + 1) / kGrid;
            const double refined = golden_max(obj, lo, hi, 1e-10);
            if (obj(refined) > best) {
                best = obj(refined);
                best_delta = refined;
            }
        }
        return std::pair<double, double>{best, best_delta};
    };

    constexpr int kAlphaGrid = 200;
    MinimaxDetail out{1e300, 0.5, 0.0};
    int best_i = kAlphaGrid;
    for (int i = 0; i <= kAlphaGrid; ++i) {
        const double alpha = dgv + (0.5 - dgv) * i / kAlphaGrid;
        const auto [val, dstar] = inner_max(alpha);
        if (val < out.value) {
            out = MinimaxDetail{val, alpha, dstar};
            best_i = i;
        }
    }
    const double step = (0.5 - dgv) / kAlphaGrid;
    const double lo = dgv + step * std::max(0, best_i - 1);
    const double hi = dgv + step * std::min(kAlphaGrid, best_i + 1);
    const double alpha_star =
        golden_min([&](double a) { return inner_max(a).first; }, lo, hi, 1e-9);
    const auto [val, dstar] = inner_max(alpha_star);
    if (val < out.value) out = MinimaxDetail{val, alpha_star, dstar};
    return out;
}

double minimax_upper_bound(double rate, const ChannelParam& ch) {
    return minimax_upper_bound_detail(rate, ch).value;
}

BoundCurve bound_curve(const ChannelParam& ch, int n_points) {
    if (n_points < 2) throw std::domain_error("bound_curve: n_points must be >= 2");
    const CriticalRates rates = critical_rate_set(ch);

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n_points) + 3);
    for (int i = 0; i < n_points; ++i) {
        grid.push_back(rates.capacity * i / (n_points - 1));
    }
    for (double seam : {rates.r_min, rates.r2, rates.r_crit}) grid.push_back(seam);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-14; }),
               grid.end());

    BoundCurve curve{rates, std::vector<BoundCurveRow>(grid.size())};
    parallel_for(grid.size(), [&](std::size_t i) {
        const double rate = grid[i];
        RegionTag tag = RegionTag::kBelowR2;
        if (rate >= rates.r_crit) {
            tag = RegionTag::kSpherePacking;
        } else if (rate >= rates.r2) {
            tag = RegionTag::kStraightLine;
        }
        curve.rows[i] = BoundCurveRow{rate, e_low(rate, ch, rates), e_up(rate, ch, rates), tag};
    });
    return curve;
}

}  // namespace bsc
