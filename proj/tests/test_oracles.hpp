#pragma once

// Independent oracles used by the unit and acceptance suites.  These stay
// deliberately naive: exact enumeration, lgamma-based binomials, dense grid
// searches and central finite differences, so that they share no code with
// the solver paths they validate.

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "bsc_exponents/critical_rates.hpp"
#include "bsc_exponents/rootfind.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "bsc_exponents/spectrum_mu.hpp"

namespace oracle {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// log2 C(n, k) through lgamma (independent of the exact binomials).
inline double log2_binomial(int n, int k) {
    if (k < 0 || k > n) return -1e300;
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::log(2.0);
}

/// Exact |{y : d(x1, y) = d(x2, y) = t*n}| by enumeration of all 2^n points,
/// for two words at distance w*n.  n <= 20.
inline std::uint64_t z_count_exhaustive(int n, int tn, int wn) {
    const std::uint64_t x1 = 0;
    const std::uint64_t x2 = wn == 64 ? ~0ULL : ((1ULL << wn) - 1);
    std::uint64_t count = 0;
    for (std::uint64_t y = 0; y < (1ULL << n); ++y) {
        if (std::popcount(y ^ x1) == tn && std::popcount(y ^ x2) == tn) ++count;
    }
    return count;
}

/// Dense-grid 2-D minimization of G(alpha, tau) under the rate constraint:
/// 4000 alpha points, tau resolved through the constraint, golden-section
/// refinement around the best cell.  Returns (omega, alpha).
inline std::pair<double, double> omega_lp_grid(double rate, int grid = 4000) {
    const double dgv = bsc::delta_gv(rate);
    auto value = [rate](double alpha) {
        double y = bsc::h2(alpha) - 1.0 + rate;
        if (y < 0.0) y = 0.0;
        return bsc::g_func(alpha, bsc::h2_inv(y));
    };
    double best = value(0.5);
    int best_i = grid;
    for (int i = 0; i <= grid; ++i) {
        const double alpha = dgv + (0.5 - dgv) * i / grid;
        const double v = value(alpha);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    const double step = (0.5 - dgv) / grid;
    const double lo = dgv + step * std::max(0, best_i - 2);
    const double hi = dgv + step * std::min(grid, best_i + 2);
    const double alpha_star = bsc::golden_min(value, lo, hi, 1e-12);
    return {std::min(value(alpha_star), best), alpha_star};
}

template <typename F>
double central_diff(const F& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Random admissible spectrum point with floors keeping it away from the
/// degenerate corners; returns (rate, alpha, omega_fraction_of_G).
struct SpectrumSample {
    double rate;
    double alpha;
    double tau;
    double g;
};

inline SpectrumSample sample_admissible(std::mt19937_64& rng, bool half_alpha) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const double rate = 0.05 + 0.85 * unit(rng);
        const double dgv = bsc::delta_gv(rate);
        const double alpha = half_alpha ? 0.5 : dgv + (0.5 - dgv) * (0.05 + 0.95 * unit(rng));
        double y = bsc::h2(alpha) - 1.0 + rate;
        if (y < 0.0) y = 0.0;
        const double tau = bsc::h2_inv(y);
        if (tau < 1e-4) continue;
        const double g = bsc::g_func(alpha, tau);
        if (g < 1e-3) continue;
        return SpectrumSample{rate, alpha, tau, g};
    }
}

}  // namespace oracle
