#include <cmath>
#include <random>

#include "bsc_exponents/rootfind.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace bsc;

TEST_SUITE_BEGIN("scalar_functions");

TEST_CASE("h2 endpoint and symmetry values") {
    CHECK(h2(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h2(0.0) == 0.0);
    CHECK(h2(1.0) == 0.0);
    // direct formula at 0.11 and symmetry between x and 1-x
    const double direct = -0.11 * std::log2(0.11) - 0.89 * std::log2(0.89);
    CHECK(h2(0.11) == doctest::Approx(direct).epsilon(1e-15));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double x = unit(rng);
        CHECK(std::abs(h2(x) - h2(1.0 - x)) <= 1e-15);
    }
    CHECK_THROWS_AS(h2(1.5), std::domain_error);
    CHECK_THROWS_AS(h2(-0.1), std::domain_error);
    CHECK(h2(-1e-13) == 0.0);  // boundary clamp
}

TEST_CASE("h2_inv endpoints and round trip") {
    CHECK(h2_inv(1.0) == 0.5);
    CHECK(h2_inv(0.0) == 0.0);
    CHECK(h2_inv(h2(0.11)) == doctest::Approx(0.11).epsilon(0).scale(1).epsilon(1e-10));
    // Away from the flat entropy apex the round trip is accurate to 1e-10;
    // at the apex itself the derivative vanishes and no inverse can do
    // better than ~sqrt(eps), so the sample stays below 0.4999.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 0.4999);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double x = unit(rng);
        worst = std::max(worst, std::abs(h2_inv(h2(x)) - x));
    }
    CHECK(worst <= 1e-10);
    CHECK_THROWS_AS(h2_inv(1.2), std::domain_error);
}

TEST_CASE("kl_div values and degenerate arguments") {
    CHECK(kl_div(0.3, 0.3) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(kl_div(0.0, 0.25) == doctest::Approx(std::log2(1.0 / 0.75)).epsilon(1e-15));
    CHECK_THROWS_AS(kl_div(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(kl_div(0.5, 1.0), std::domain_error);
    // nonnegativity with equality only on the diagonal
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double x = unit(rng), y = unit(rng);
        CHECK(kl_div(x, y) >= -1e-15);
        if (std::abs(x - y) > 1e-3) CHECK(kl_div(x, y) > 0.0);
    }
}

TEST_CASE("g_func forms agree and boundary cases") {
    for (double alpha : {0.05, 0.2, 0.35, 0.5}) {
        CHECK(g_func(alpha, alpha) == doctest::Approx(0.0).epsilon(1e-15));
    }
    // second algebraic form: 1/2 - s - (1-2a)^2 / (2 (1+2s))
    double worst = 0.0;
    for (int i = 1; i <= 32; ++i) {
        for (int j = 0; j <= 32; ++j) {
            const double alpha = 0.5 * i / 32.0;
            const double tau = alpha * j / 32.0;
            const double s = std::sqrt(tau * (1.0 - tau));
            const double second =
                0.5 - s - (1.0 - 2.0 * alpha) * (1.0 - 2.0 * alpha) / (2.0 * (1.0 + 2.0 * s));
            worst = std::max(worst, std::abs(g_func(alpha, tau) - second));
        }
    }
    CHECK(worst <= 1e-13);
    for (double tau : {0.01, 0.1, 0.3, 0.49}) {
        CHECK(std::abs(g_func(0.5, tau) - (0.5 - std::sqrt(tau * (1.0 - tau)))) <= 1e-13);
    }
    CHECK_THROWS_AS(g_func(0.2, 0.3), std::domain_error);
}

TEST_CASE("delta_gv endpoints and entropy residual") {
    CHECK(delta_gv(1.0) == 0.0);
    CHECK(delta_gv(0.0) == 0.5);
    CHECK(std::abs(h2(delta_gv(0.30524)) - (1.0 - 0.30524)) <= 1e-9);
}

TEST_CASE("t1 endpoints and quadratic identity") {
    CHECK(t1(0.0) == 0.0);
    CHECK(t1(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    for (double w : {1e-6, 0.01, 0.2, 0.4, 0.499}) {
        const double t = t1(w);
        CHECK(std::abs(2.0 * t - w - 2.0 * t * t) <= 1e-15);
    }
    const ChannelParam ch(0.01);
    const double w1 = omega1(ch);
    const double expect = std::sqrt(ch.p) / (std::sqrt(ch.q) + std::sqrt(ch.p));
    CHECK(std::abs(t1(w1) - expect) <= 1e-12);
    CHECK_THROWS_AS(t1(0.6), std::domain_error);
}

TEST_CASE("t2 endpoints and crossing with t1") {
    const ChannelParam ch(0.07);
    CHECK(t2(0.0, ch) == doctest::Approx(ch.p).epsilon(1e-15));
    CHECK(t2(1.0, ch) == doctest::Approx(0.5).epsilon(1e-15));
    const double w1 = omega1(ch);
    CHECK(std::abs(t1(w1) - t2(w1, ch)) <= 1e-12);
}

TEST_CASE("omega1 limits and independent root-find") {
    CHECK(omega1(ChannelParam(0.5 - 1e-9)) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(omega1(ChannelParam(1e-9)) == doctest::Approx(0.0).epsilon(0).scale(1).epsilon(1e-4));
    // crossing of t1 and t2 found by bisection, independent of the formula
    const ChannelParam ch(0.01);
    const double root = bisect([&](double w) { return t1(w) - t2(w, ch); }, 1e-6, 0.5 - 1e-6);
    CHECK(std::abs(root - omega1(ch)) <= 1e-12);
    // strictly increasing in p
    double prev = 0.0;
    for (double p = 0.01; p < 0.5; p += 0.01) {
        const double w = omega1(ChannelParam(p));
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("u_func boundary values and binomial oracle band") {
    for (double w : {0.1, 0.3, 0.6}) {
        CHECK(u_func(0.5 * w, w) == doctest::Approx(w).epsilon(1e-14));
        CHECK(u_func(0.5, w) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(u_func(0.05, 0.2), std::domain_error);
    // exact counting oracle: |(1/n) log2 [C((1-w)n, tn - wn/2) C(wn, wn/2)] - u|
    // lies in [0, (2/n) log2((n+2)/2)]
    for (int n : {16, 20, 24}) {
        const double band = 2.0 / n * std::log2((n + 2.0) / 2.0);
        for (int wn = 2; wn < n; wn += 2) {
            for (int tn = wn / 2; 2 * tn <= n; ++tn) {
                const double w = static_cast<double>(wn) / n;
                const double t = static_cast<double>(tn) / n;
                const double log2z = oracle::log2_binomial(n - wn, tn - wn / 2) +
                                     oracle::log2_binomial(wn, wn / 2);
                const double delta = u_func(t, w) - log2z / n;
                CHECK(delta >= -1e-9);
                CHECK(delta <= band + 1e-9);
            }
        }
    }
}

TEST_CASE("u_func derivatives match closed forms") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double w = 0.05 + 0.5 * unit(rng);
        const double t = 0.5 * w + (0.5 - 0.5 * w) * (0.1 + 0.8 * unit(rng));
        const double h = 1e-6;
        const double dt = oracle::central_diff([&](double x) { return u_func(x, w); }, t, h);
        const double dw = oracle::central_diff([&](double x) { return u_func(t, x); }, w, h);
        const double dt_cf = std::log2((2.0 - 2.0 * t - w) / (2.0 * t - w));
        const double dw_cf =
            -0.5 * std::log2((1.0 - w) * (1.0 - w) / ((2.0 * t - w) * (2.0 - 2.0 * t - w)));
        CHECK(std::abs(dt - dt_cf) <= 1e-6);
        CHECK(std::abs(dw - dw_cf) <= 1e-6);
    }
}

TEST_CASE("c_func minimum sits at the Elias radius") {
    const ChannelParam ch(0.05);
    for (double w : {0.05, 0.15, 0.3}) {
        const double tstar = t2(w, ch);
        const double expect = 0.5 * w * std::log2(1.0 / (4.0 * ch.p * ch.q));
        CHECK(std::abs(c_func(w, tstar, ch) - expect) <= 1e-12);
        // grid minimum lands on the cell nearest t2
        double best = 1e300;
        int best_k = -1;
        const int grid = 50;
        for (int k = 0; k <= grid; ++k) {
            const double t = 0.5 * w + (0.5 - 0.5 * w) * k / grid;
            const double c = c_func(w, t, ch);
            if (c < best) {
                best = c;
                best_k = k;
            }
        }
        const double tbest = 0.5 * w + (0.5 - 0.5 * w) * best_k / grid;
        CHECK(std::abs(tbest - tstar) <= (0.5 - 0.5 * w) / grid + 1e-12);
        // derc-style slope: negative below t2, matching the closed form
        const double t = 0.5 * (0.5 * w + tstar);
        const double slope =
            oracle::central_diff([&](double x) { return c_func(w, x, ch); }, t, 1e-6);
        const double slope_cf = std::log2(ch.q * (2.0 * t - w) / (ch.p * (2.0 - 2.0 * t - w)));
        CHECK(slope < 0.0);
        CHECK(std::abs(slope - slope_cf) <= 1e-6);
    }
    // recomposition from entropy primitives
    const double w = 0.2, t = 0.15;
    const double expect = t * std::log2(ch.q / ch.p) - std::log2(ch.q) -
                          (w + (1.0 - w) * h2((2.0 * t - w) / (2.0 * (1.0 - w))));
    CHECK(c_func(w, t, ch) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("t_radius branch dispatch") {
    const ChannelParam ch(0.01);
    const double w1 = omega1(ch);
    CHECK(std::abs(t_radius(w1, ch) - t1(w1)) <= 1e-12);
    CHECK(std::abs(t_radius(w1, ch) - t2(w1, ch)) <= 1e-12);
    CHECK(t_radius(0.0, ch) == 0.0);
    for (double w = 0.01; w <= 0.5; w += 0.01) {
        const double expect = w <= w1 ? t1(w) : t2(w, ch);
        CHECK(t_radius(w, ch) == doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("channel and rate-point invariants") {
    CHECK_THROWS_AS(ChannelParam(0.0), std::domain_error);
    CHECK_THROWS_AS(ChannelParam(0.5), std::domain_error);
    CHECK_THROWS_AS(ChannelParam(-0.1), std::domain_error);
    const ChannelParam ch(0.2);
    CHECK(ch.q == 0.8);
    const RatePoint rp = RatePoint::from_rate(0.4);
    CHECK(std::abs(h2(rp.delta) - 0.6) <= 1e-12);
    CHECK(rp.delta <= 0.5);
}

TEST_SUITE_END();
