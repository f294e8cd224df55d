#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

// Bracketed 1-D solvers.  Every target in this project is monotone (or
// unimodal) on its bracket, so plain bisection / golden section is globally
// convergent and there is no need for anything fancier.

namespace bsc {

/// Raised when a bracket has no sign change or an iteration cap is hit.
/// The message carries the bracket endpoints and residuals.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct BisectOptions {
    double xtol = 1e-14;
    int max_iter = 200;
};

/// Root of f on [lo, hi]; f(lo) and f(hi) must have opposite signs.
template <typename F>
double bisect(F&& f, double lo, double hi, BisectOptions opt = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "bisect: no sign change on bracket [%.17g, %.17g], residuals "
                      "(%.17g, %.17g)",
                      lo, hi, flo, fhi);
        throw ConvergenceError(buf);
    }
    for (int i = 0; i < opt.max_iter && (hi - lo) > opt.xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Minimizer of a unimodal f on [lo, hi] by golden-section search.
template <typename F>
double golden_min(F&& f, double lo, double hi, double xtol = 1e-10) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Maximizer of a unimodal f on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, double xtol = 1e-10) {
    return golden_min([&](double x) { return -f(x); }, lo, hi, xtol);
}

}  // namespace bsc
