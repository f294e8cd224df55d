#include "bsc_exponents/spectrum_mu.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace bsc {

namespace {

// B^2 w^2 - 2 a1 w + a1^2.  G(alpha, tau) is exactly the smaller root, so
// for admissible omega the value is nonnegative; roundoff at the double
// root is clamped, anything clearly negative means omega > G.
double discriminant(double a1, double big_b, double omega, const char* who) {
    double d = big_b * big_b * omega * omega - 2.0 * a1 * omega + a1 * a1;
    if (d < 0.0) {
        if (d < -1e-13) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%s: omega = %.17g beyond g_func(alpha, tau)", who,
                          omega);
            throw std::domain_error(buf);
        }
        d = 0.0;
    }
    return d;
}

template <typename F>
double simpson_recurse(const F& f, double a, double fa, double m, double fm, double b, double fb,
                       double whole, double tol, int depth, double& err_acc, long& evals,
                       bool& converged) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol) converged = false;
        err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, err_acc, evals,
                           converged) +
           simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1, err_acc, evals,
                           converged);
}

// Adaptive Simpson on [a, b]: 8 initial panels, then recursive refinement.
// The integrand is smooth except for a square-root wrinkle at the right
// endpoint when omega = G; the subdivision depth of 48 absorbs it.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, double& err_acc, long& evals,
                        bool& converged) {
    constexpr int kPanels = 8;
    constexpr int kMaxDepth = 48;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        const double xm = 0.5 * (x0 + x1);
        const double f0 = f(x0);
        const double fm = f(xm);
        const double f1 = f(x1);
        evals += 3;
        const double whole = h / 6.0 * (f0 + 4.0 * fm + f1);
        total += simpson_recurse(f, x0, f0, xm, fm, x1, f1, whole, tol / kPanels, kMaxDepth,
                                 err_acc, evals, converged);
    }
    return total;
}

}  // namespace

SpectrumArgs SpectrumArgs::make(double rate, double alpha, double omega) {
    if (!(rate >= -kBoundaryTol) || !(rate <= 1.0 + kBoundaryTol)) {
        throw std::domain_error("SpectrumArgs: rate outside [0, 1]");
    }
    rate = std::min(std::max(rate, 0.0), 1.0);
    const double dgv = delta_gv(rate);
    if (alpha < dgv - kBoundaryTol || alpha > 0.5 + kBoundaryTol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "SpectrumArgs: alpha = %.17g outside [delta_gv(rate) = %.17g, 1/2]", alpha,
                      dgv);
        throw std::domain_error(buf);
    }
    alpha = std::min(std::max(alpha, dgv), 0.5);
    double y = h2(alpha) - 1.0 + rate;
    if (y < 0.0) y = 0.0;  // alpha == delta_gv up to rounding
    const double tau = h2_inv(y);
    const double g = g_func(alpha, tau);
    if (omega < -kBoundaryTol || omega > g + kBoundaryTol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "SpectrumArgs: omega = %.17g outside [0, g_func(alpha, tau) = %.17g]", omega,
                      g);
        throw std::domain_error(buf);
    }
    omega = std::min(std::max(omega, 0.0), g);
    return SpectrumArgs{rate, alpha, omega, tau};
}

QuadratureResult mu_integral(const SpectrumArgs& args, double abs_tol) {
    if (args.omega <= 0.0) return QuadratureResult{0.0, 0.0, 0, true};
    const double alpha = args.alpha;
    const double tau = args.tau;
    const double omega = args.omega;
    const double half_a1 = alpha * (1.0 - alpha) - tau * (1.0 - tau);

    auto integrand = [alpha, half_a1](double y) {
        const double p_val = half_a1 - y * (1.0 - 2.0 * y);
        const double q_val = (alpha - y) * (1.0 - alpha - y);
        double disc = p_val * p_val - 4.0 * q_val * y * y;
        if (disc < 0.0) {
            if (disc < -1e-12) {
                throw std::domain_error("mu_integral: negative discriminant on integration grid");
            }
            disc = 0.0;
        }
        return std::log2((p_val + std::sqrt(disc)) / q_val);
    };

    double err_acc = 0.0;
    long evals = 0;
    bool converged = true;
    const double integral =
        adaptive_simpson(integrand, 0.0, 0.5 * omega, 0.5 * abs_tol, err_acc, evals, converged);

    const double inner = (alpha - 0.5 * omega) / (1.0 - omega);
    const double value = h2(alpha) - 2.0 * integral - (1.0 - omega) * h2(inner);
    // A depth-cap hit at the omega = G endpoint (square-root wrinkle) still
    // counts as converged when the accumulated estimate meets the target.
    if (!converged && 2.0 * err_acc <= abs_tol) converged = true;
    return QuadratureResult{value, 2.0 * err_acc, evals, converged};
}

namespace detail {

double mu_closed_raw(double alpha, double tau, double omega) {
    const double a1 = 2.0 * (alpha * (1.0 - alpha) - tau * (1.0 - tau));
    const double big_a = 1.0 - 2.0 * alpha;
    const double big_b = 1.0 - 2.0 * tau;

    // tau == 0 makes B = 1 and the T-terms diverge pairwise at omega = G;
    // in that corner the boundary identity gives the finite limit directly.
    if (tau < 1e-13 && omega > a1 - 1e-11) {
        const double rate = 1.0 - h2(alpha) + h2(tau);
        return l_func(omega) + rate - 1.0;
    }

    const double d = discriminant(a1, big_b, omega, "mu_closed");
    const double sqrt_d = std::sqrt(d);
    const double v = (sqrt_d + a1) / omega;
    const double v_minus_1 = (sqrt_d + a1 - omega) / omega;
    // v^2 - B^2 = 2 a1 (a1 - omega + sqrt(d)) / omega^2: all summands are
    // positive for omega <= G, so no cancellation; v - B follows from it.
    const double v2_minus_b2 = 2.0 * a1 * (a1 - omega + sqrt_d) / (omega * omega);
    const double v2_minus_a2 = v2_minus_b2 + 2.0 * a1;
    const double v_minus_b = v2_minus_b2 / (v + big_b);
    const double v_minus_a = v2_minus_a2 / (v + big_a);

    double t_val = omega * std::log2(v_minus_1) - (1.0 - omega) * std::log2(v2_minus_a2 / v2_minus_b2) +
                   big_b * std::log2((v + big_b) / v_minus_b) -
                   v_minus_1 * 2.0 * a1 / (v2_minus_b2 * std::numbers::ln2);
    if (big_a > 1e-15) {
        t_val -= big_a * std::log2((v + big_a) / v_minus_a);
    }

    const double inner = (alpha - 0.5 * omega) / (1.0 - omega);
    const double omega_term = omega * (1.0 + std::log2(omega) - std::numbers::log2e);
    return (1.0 - omega) * h2(inner) - h2(alpha) + 2.0 * h2(omega) + omega_term - t_val;
}

double mu_domega_raw(double alpha, double tau, double omega) {
    const double a1 = 2.0 * (alpha * (1.0 - alpha) - tau * (1.0 - tau));
    const double big_b = 1.0 - 2.0 * tau;
    const double two_am = 2.0 * alpha - omega;
    if (two_am <= 0.0) {
        throw std::domain_error("mu_domega: omega = 2 alpha is singular");
    }
    const double d = discriminant(a1, big_b, omega, "mu_domega");
    const double num = (1.0 - omega) * std::sqrt(two_am * (2.0 - 2.0 * alpha - omega));
    const double den = a1 - omega * (1.0 - omega) + std::sqrt(d);
    return std::log2(num / den);
}

}  // namespace detail

double mu_closed(const SpectrumArgs& args) {
    if (args.omega <= 0.0) {
        throw std::domain_error("mu_closed: omega = 0 (use the limit value 0)");
    }
    return detail::mu_closed_raw(args.alpha, args.tau, args.omega);
}

double mu_half(double rate, double omega) {
    if (!(rate > 0.0) || !(rate < 1.0 + kBoundaryTol)) {
        throw std::domain_error("mu_half: rate outside (0, 1]");
    }
    const double tau = h2_inv(std::min(rate, 1.0));
    const double big_b = 1.0 - 2.0 * tau;
    if (omega < 0.0) {
        if (omega < -kBoundaryTol) throw std::domain_error("mu_half: omega < 0");
        omega = 0.0;
    }
    double disc = big_b * big_b - 4.0 * omega * (1.0 - omega);
    if (disc < 0.0) {
        if (disc < -1e-12) {
            throw std::domain_error("mu_half: negative discriminant (omega beyond g_func(1/2, tau))");
        }
        disc = 0.0;
    }
    const double g = 0.5 * (big_b + std::sqrt(disc));
    return -2.0 * (1.0 - omega) * std::log2(1.0 - omega) - std::log2(tau) -
           2.0 * (1.0 - tau) * std::log2(1.0 - tau) + big_b * std::log2(tau - omega + g) +
           std::log2(1.0 - omega - big_b * g) - 2.0 * omega * std::log2(g) - 2.0;
}

double l_func(double omega) {
    if (omega < 0.0 || omega > 0.5) {
        if (omega >= -kBoundaryTol && omega <= 0.5 + kBoundaryTol) {
            omega = std::min(std::max(omega, 0.0), 0.5);
        } else {
            throw std::domain_error("l_func: omega outside [0, 1/2]");
        }
    }
    if (omega == 0.0) return 0.0;
    const double t = t1(omega);
    const double inner = t * t / (1.0 - omega);  // 2 t1(w) - w == 2 t1(w)^2
    return 2.0 * h2(t) - omega - (1.0 - omega) * h2(inner);
}

double mu_domega(const SpectrumArgs& args) {
    return detail::mu_domega_raw(args.alpha, args.tau, args.omega);
}

}  // namespace bsc
