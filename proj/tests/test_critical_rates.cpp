#include <cmath>

#include "bsc_exponents/critical_rates.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace bsc;

TEST_SUITE_BEGIN("critical_rates");

TEST_CASE("omega_lp closed form below r0") {
    const GlobalConstants& gc = global_constants();
    for (double rate : {0.05, 0.15, 0.3}) {
        REQUIRE(rate <= gc.r0);
        const LpBoundPoint lp = omega_lp(rate);
        const double tau = h2_inv(rate);
        CHECK(lp.alpha_r == 0.5);
        CHECK(std::abs(lp.omega_r - (0.5 - std::sqrt(tau * (1.0 - tau)))) <= 1e-13);
        CHECK(std::abs(lp.tau_r - tau) <= 1e-13);
    }
}

TEST_CASE("omega_lp approaches the universal constants from above r0") {
    const GlobalConstants& gc = global_constants();
    const LpBoundPoint lp = omega_lp(gc.r0 + 1e-5);
    CHECK(lp.alpha_r > 0.49);
    CHECK(std::abs(lp.tau_r - gc.tau0) <= 2e-3);
    // invariants of the returned point
    CHECK(std::abs(h2(lp.alpha_r) - h2(lp.tau_r) - (1.0 - lp.rate)) <= 1e-10);
    CHECK(std::abs(lp.omega_r - g_func(lp.alpha_r, lp.tau_r)) <= 1e-15);
}

TEST_CASE("omega_lp matches the dense-grid oracle") {
    for (double rate : {0.4, 0.6, 0.8}) {
        const auto [w_grid, a_grid] = oracle::omega_lp_grid(rate);
        const LpBoundPoint lp = omega_lp(rate);
        CHECK(std::abs(lp.omega_r - w_grid) <= 1e-6);
        CHECK(std::abs(lp.alpha_r - a_grid) <= 1e-4);
    }
}

TEST_CASE("omega_lp monotonicity across the rate axis") {
    double prev_w = 1.0, prev_a = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const double rate = static_cast<double>(i) / 201.0;
        const LpBoundPoint lp = omega_lp(rate);
        CHECK(lp.omega_r < prev_w);
        CHECK(lp.alpha_r <= prev_a + 1e-12);
        prev_w = lp.omega_r;
        prev_a = lp.alpha_r;
    }
}

TEST_CASE("tau_r radical cross-check above r0") {
    for (double rate : {0.35, 0.5, 0.7, 0.9}) {
        const LpBoundPoint lp = omega_lp(rate);
        const double inner = std::sqrt((1.0 - lp.omega_r) * (1.0 - lp.omega_r) -
                                       (1.0 - 2.0 * lp.alpha_r) * (1.0 - 2.0 * lp.alpha_r)) -
                             lp.omega_r;
        const double radical = 0.5 * (1.0 - std::sqrt(1.0 - inner * inner));
        CHECK(std::abs(lp.tau_r - radical) <= 1e-8);
    }
}

TEST_CASE("dg_dalpha matches finite differences of the constrained G") {
    for (double rate : {0.45, 0.6, 0.75}) {
        auto g_of = [rate](double alpha) {
            return g_func(alpha, h2_inv(h2(alpha) - 1.0 + rate));
        };
        const double dgv = delta_gv(rate);
        for (int i = 1; i < 10; ++i) {
            const double alpha = dgv + (0.5 - dgv) * i / 10.0;
            const double tau = h2_inv(h2(alpha) - 1.0 + rate);
            const double fd = oracle::central_diff(g_of, alpha, 1e-6);
            CHECK(std::abs(dg_dalpha(alpha, tau) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("r_crit digits and limits") {
    CHECK(std::abs(r_crit(ChannelParam(0.01)) - 0.5591) <= 5e-4);
    CHECK(r_crit(ChannelParam(0.4999)) <= 2e-4);
    CHECK(r_crit(ChannelParam(1e-8)) >= 0.999);
}

TEST_CASE("r1 digits, limits and value at p0") {
    CHECK(std::abs(r1(ChannelParam(0.01)) - 0.5518) <= 5e-4);
    CHECK(r1(ChannelParam(0.4999)) <= 1e-3);
    const GlobalConstants& gc = global_constants();
    CHECK(std::abs(r1(ChannelParam(gc.p0)) - gc.r0) <= 1e-6);
}

TEST_CASE("r2 digits and equality with r1 above p0") {
    CHECK(std::abs(r2(ChannelParam(0.01)) - 0.5370) <= 5e-4);
    for (double p : {0.05, 0.1, 0.25, 0.4}) {
        CHECK(std::abs(r2(ChannelParam(p)) - r1(ChannelParam(p))) <= 1e-8);
    }
}

TEST_CASE("r2 equals its max formulation") {
    for (double p : {0.001, 0.005, 0.01, 0.036587, 0.05, 0.1, 0.2, 0.3, 0.4}) {
        const ChannelParam ch(p);
        CHECK(std::abs(r2(ch) - r2_max_form(ch)) <= 1e-8);
    }
}

TEST_CASE("r2 agrees with the parametric sweep") {
    for (double alpha : {0.1, 0.25, 0.4, 0.45}) {
        const SweepPoint sp = parametric_sweep(alpha);
        CHECK(std::abs(r2(ChannelParam(sp.p)) - sp.rate) <= 1e-8);
    }
}

TEST_CASE("r_min digits, limit and ordering below r2") {
    CHECK(std::abs(r_min(ChannelParam(0.01)) - 0.3516) <= 5e-4);
    CHECK(r_min(ChannelParam(1e-8)) >= 0.999);
    for (double p = 0.01; p < 0.5; p += 0.02) {
        const ChannelParam ch(p);
        CHECK(r_min(ch) < r2(ch));
    }
}

TEST_CASE("global constants against their published digits") {
    const GlobalConstants& gc = global_constants();
    CHECK(std::abs(gc.tau0 - 0.054507) <= 1e-5);
    CHECK(std::abs(gc.r0 - 0.30524) <= 1e-5);
    CHECK(std::abs(gc.p0 - 0.036587) <= 1e-5);
    CHECK(std::abs(gc.p1 - 0.0078176) <= 1e-6);
    // defining-equation residual for tau0
    const double s = std::sqrt(gc.tau0 * (1.0 - gc.tau0));
    CHECK(std::abs((1.0 - 2.0 * gc.tau0) * (1.0 + 0.5 / s) -
                   std::log((1.0 - gc.tau0) / gc.tau0)) <= 1e-12);
    CHECK(std::abs(gc.r0 - h2(gc.tau0)) <= 1e-15);
}

TEST_CASE("p0 separates the r1-r2 merge") {
    const GlobalConstants& gc = global_constants();
    const double below = gc.p0 - 2e-4;
    const double above = gc.p0 + 2e-4;
    CHECK(r1(ChannelParam(below)) - r2(ChannelParam(below)) > 1e-9);
    CHECK(std::abs(r1(ChannelParam(above)) - r2(ChannelParam(above))) <= 1e-8);
}

TEST_CASE("p1 separates r1 and r_crit") {
    const GlobalConstants& gc = global_constants();
    CHECK(r1(ChannelParam(gc.p1 - 1e-4)) > r_crit(ChannelParam(gc.p1 - 1e-4)));
    CHECK(r1(ChannelParam(gc.p1 + 1e-4)) < r_crit(ChannelParam(gc.p1 + 1e-4)));
}

TEST_CASE("rate orderings per channel region") {
    const GlobalConstants& gc = global_constants();
    // R2 < Rcrit everywhere; R0 < R2 < R1 below p0; R2 = R1 < R0 above p0
    for (double p : {0.004, 0.02, gc.p0 - 1e-3, gc.p0 + 1e-3, 0.1, 0.25, 0.4}) {
        const ChannelParam ch(p);
        const double v2 = r2(ch);
        CHECK(v2 < r_crit(ch));
        if (p < gc.p0) {
            CHECK(gc.r0 < v2);
            CHECK(v2 < r1(ch));
        } else {
            CHECK(std::abs(v2 - r1(ch)) <= 1e-8);
            CHECK(v2 < gc.r0);
        }
    }
    // r_crit crosses r0 at p ~ 0.05014 (published with four digits)
    CHECK(r_crit(ChannelParam(0.0502)) <= gc.r0);
    CHECK(r_crit(ChannelParam(0.0500)) > gc.r0);
    // ordering chain at p = 0.25
    const ChannelParam ch(0.25);
    CHECK(r_min(ch) < r2(ch));
    CHECK(std::abs(r2(ch) - r1(ch)) <= 1e-8);
    CHECK(r1(ch) < r_crit(ch));
    CHECK(r_crit(ch) < capacity(ch));
}

TEST_CASE("parametric sweep limits and round trip") {
    const GlobalConstants& gc = global_constants();
    const SweepPoint near_half = parametric_sweep(0.4999);
    CHECK(std::abs(near_half.tau - gc.tau0) <= 1e-3);
    CHECK(std::abs(near_half.rate - gc.r0) <= 1e-4);
    CHECK(std::abs(near_half.p - gc.p0) <= 1e-4);
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.45}) {
        const SweepPoint sp = parametric_sweep(alpha);
        CHECK(sp.tau < sp.alpha);
        CHECK(std::abs(omega_lp(sp.rate).alpha_r - alpha) <= 1e-6);
        CHECK(std::abs(g_func(alpha, sp.tau) - sp.omega) <= 1e-15);
        // the stationarity residual itself
        CHECK(std::abs(dg_dalpha(alpha, sp.tau)) <= 1e-10);
    }
    CHECK_THROWS_AS(parametric_sweep(0.5), std::domain_error);
    CHECK_THROWS_AS(parametric_sweep(0.0), std::domain_error);
}

TEST_CASE("parametric sweep small-alpha asymptotics") {
    // Solving the stationarity system at alpha = 1e-3 gives tau ~ alpha^2
    // while G(alpha, tau(alpha)) = 2[alpha(1-alpha) - tau(1-tau)]/(1+2s)
    // approaches 2*alpha (and hence p = omega1^{-1}(G) approaches alpha^2,
    // rate approaches 1 - alpha log2(1/alpha)); all four are pinned here.
    const SweepPoint sp = parametric_sweep(1e-3);
    const double a2 = 1e-6;
    CHECK(sp.tau / a2 >= 0.8);
    CHECK(sp.tau / a2 <= 1.2);
    CHECK(sp.omega / 1e-3 >= 1.8);
    CHECK(sp.omega / 1e-3 <= 2.05);
    CHECK(4.0 * sp.p / a2 >= 3.5);
    CHECK(4.0 * sp.p / a2 <= 4.1);
    const double rate_asym = 1.0 - 1e-3 * std::log2(1e3);
    CHECK(std::abs((1.0 - sp.rate) / (1.0 - rate_asym) - 1.0) <= 0.2);
}

TEST_CASE("omega1_inverse inverts omega1") {
    for (double p : {0.001, 0.01, 0.1, 0.3, 0.49}) {
        const double w = omega1(ChannelParam(p));
        CHECK(std::abs(omega1_inverse(w) - p) <= 1e-13);
    }
    CHECK(omega1_inverse(0.0) == 0.0);
}

TEST_SUITE_END();
