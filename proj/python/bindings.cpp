// pybind11 module exposing the main operations of the C++ core.
// Channel-taking functions accept the crossover probability p directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsc_exponents/combinatorial.hpp"
#include "bsc_exponents/critical_rates.hpp"
#include "bsc_exponents/exponent_bounds.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "bsc_exponents/spectrum_mu.hpp"
#include "bsc_exponents/verify.hpp"
#include "bsc_exponents/version.hpp"

namespace py = pybind11;
using namespace bsc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reliability-function bounds for the binary symmetric channel";
    m.attr("__version__") = kVersion;

    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    // scalar functions
    m.def("h2", &h2, py::arg("x"), "Binary entropy in bits");
    m.def("h2_inv", &h2_inv, py::arg("y"), "Inverse binary entropy on [0, 1/2]");
    m.def("kl_div", &kl_div, py::arg("x"), py::arg("y"), "Binary KL divergence in bits");
    m.def("g_func", &g_func, py::arg("alpha"), py::arg("tau"));
    m.def("delta_gv", &delta_gv, py::arg("rate"), "Gilbert-Varshamov radius");
    m.def("t1", &t1, py::arg("omega"), "Johnson-type radius");
    m.def(
        "t2", [](double omega, double p) { return t2(omega, ChannelParam(p)); }, py::arg("omega"),
        py::arg("p"), "Elias radius");
    m.def(
        "omega1", [](double p) { return omega1(ChannelParam(p)); }, py::arg("p"),
        "Distance where t1 and t2 cross");
    m.def("u_func", &u_func, py::arg("t"), py::arg("omega"), "Sphere-intersection exponent");
    m.def(
        "c_func", [](double omega, double t, double p) { return c_func(omega, t, ChannelParam(p)); },
        py::arg("omega"), py::arg("t"), py::arg("p"), "Pairwise ambiguity exponent");
    m.def(
        "t_radius", [](double omega, double p) { return t_radius(omega, ChannelParam(p)); },
        py::arg("omega"), py::arg("p"), "min(t1, t2)");

    // spectrum exponent
    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("error_estimate", &QuadratureResult::error_estimate)
        .def_readonly("evaluations", &QuadratureResult::evaluations)
        .def_readonly("converged", &QuadratureResult::converged)
        .def("__repr__", [](const QuadratureResult& q) {
            return "QuadratureResult(value=" + std::to_string(q.value) + ")";
        });

    m.def(
        "mu_integral",
        [](double rate, double alpha, double omega, double tol) {
            return mu_integral(SpectrumArgs::make(rate, alpha, omega), tol);
        },
        py::arg("rate"), py::arg("alpha"), py::arg("omega"), py::arg("tol") = 1e-12,
        "Spectrum exponent by adaptive quadrature");
    m.def(
        "mu_closed",
        [](double rate, double alpha, double omega) {
            return mu_closed(SpectrumArgs::make(rate, alpha, omega));
        },
        py::arg("rate"), py::arg("alpha"), py::arg("omega"),
        "Spectrum exponent, closed form");
    m.def("mu_half", &mu_half, py::arg("rate"), py::arg("omega"),
          "Spectrum exponent at alpha = 1/2, dedicated closed form");
    m.def("l_func", &l_func, py::arg("omega"));
    m.def(
        "mu_domega",
        [](double rate, double alpha, double omega) {
            return mu_domega(SpectrumArgs::make(rate, alpha, omega));
        },
        py::arg("rate"), py::arg("alpha"), py::arg("omega"), "d mu / d omega, closed form");

    // critical rates
    py::class_<LpBoundPoint>(m, "LpBoundPoint")
        .def_readonly("rate", &LpBoundPoint::rate)
        .def_readonly("omega_r", &LpBoundPoint::omega_r)
        .def_readonly("alpha_r", &LpBoundPoint::alpha_r)
        .def_readonly("tau_r", &LpBoundPoint::tau_r);
    py::class_<CriticalRates>(m, "CriticalRates")
        .def_readonly("p", &CriticalRates::p)
        .def_readonly("capacity", &CriticalRates::capacity)
        .def_readonly("r_crit", &CriticalRates::r_crit)
        .def_readonly("r1", &CriticalRates::r1)
        .def_readonly("r2", &CriticalRates::r2)
        .def_readonly("r_min", &CriticalRates::r_min);
    py::class_<GlobalConstants>(m, "GlobalConstants")
        .def_readonly("tau0", &GlobalConstants::tau0)
        .def_readonly("r0", &GlobalConstants::r0)
        .def_readonly("p0", &GlobalConstants::p0)
        .def_readonly("p1", &GlobalConstants::p1);
    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("alpha", &SweepPoint::alpha)
        .def_readonly("tau", &SweepPoint::tau)
        .def_readonly("rate", &SweepPoint::rate)
        .def_readonly("omega", &SweepPoint::omega)
        .def_readonly("p", &SweepPoint::p);

    m.def(
        "capacity", [](double p) { return capacity(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "r_crit", [](double p) { return r_crit(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "r1", [](double p) { return r1(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "r2", [](double p) { return r2(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "r2_max_form", [](double p) { return r2_max_form(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "r_min", [](double p) { return r_min(ChannelParam(p)); }, py::arg("p"));
    m.def(
        "critical_rate_set", [](double p) { return critical_rate_set(ChannelParam(p)); },
        py::arg("p"));
    m.def("global_constants", &global_constants, py::return_value_policy::copy);
    m.def("omega_lp", &omega_lp, py::arg("rate"), "LP distance-bound point at rate R");
    m.def("omega1_inverse", &omega1_inverse, py::arg("omega"));
    m.def("parametric_sweep", &parametric_sweep, py::arg("alpha"));
    m.def("dg_dalpha", &dg_dalpha, py::arg("alpha"), py::arg("tau"));

    // exponent bounds
    m.def(
        "sphere_packing_exponent",
        [](double rate, double p) { return sphere_packing_exponent(rate, ChannelParam(p)); },
        py::arg("rate"), py::arg("p"));
    m.def(
        "e_low", [](double rate, double p) { return e_low(rate, ChannelParam(p)); },
        py::arg("rate"), py::arg("p"), "Lower reliability envelope");
    m.def(
        "e_up", [](double rate, double p) { return e_up(rate, ChannelParam(p)); },
        py::arg("rate"), py::arg("p"), "Upper reliability envelope");
    m.def(
        "w_func",
        [](double rate, double alpha, double omega, double p) {
            return w_func(SpectrumArgs::make(rate, alpha, omega), ChannelParam(p));
        },
        py::arg("rate"), py::arg("alpha"), py::arg("omega"), py::arg("p"));
    m.def(
        "minimax_upper_bound",
        [](double rate, double p) { return minimax_upper_bound(rate, ChannelParam(p)); },
        py::arg("rate"), py::arg("p"), "General min-max upper bound on E(R, p)");
    m.def(
        "bound_curve",
        [](double p, int points) {
            const BoundCurve curve = bound_curve(ChannelParam(p), points);
            py::list r, lo, up, tag;
            for (const auto& row : curve.rows) {
                r.append(row.rate);
                lo.append(row.e_low);
                up.append(row.e_up);
                tag.append(std::string(region_tag_name(row.region)));
            }
            py::dict d;
            d["R"] = r;
            d["E_low"] = lo;
            d["E_up"] = up;
            d["region_tag"] = tag;
            d["rates"] = py::cast(curve.rates);
            return d;
        },
        py::arg("p"), py::arg("points") = 512,
        "Sampled envelopes with seam rates inserted exactly");

    // combinatorial oracles
    py::class_<JohnsonBoundVerdict>(m, "JohnsonBoundVerdict")
        .def_readonly("premise_spectrum", &JohnsonBoundVerdict::premise_spectrum)
        .def_readonly("premise_radius", &JohnsonBoundVerdict::premise_radius)
        .def_readonly("conclusion", &JohnsonBoundVerdict::conclusion)
        .def_readonly("implication_ok", &JohnsonBoundVerdict::implication_ok);
    m.def(
        "spectrum",
        [](int n, const std::vector<std::uint64_t>& words) {
            const CodeSpectrum s = spectrum(BinaryCode::make(n, words));
            py::list b;
            for (std::size_t i = 0; i < s.counts.size(); ++i) b.append(s.b(static_cast<int>(i)));
            return b;
        },
        py::arg("n"), py::arg("words"), "Exact distance distribution B_i of a code");
    m.def("z_count", &z_count, py::arg("n"), py::arg("t"), py::arg("omega"),
          "Exact two-sphere intersection cardinality");
    m.def("binomial_exact", &binomial_exact, py::arg("n"), py::arg("k"));
    m.def(
        "johnson_bound_check",
        [](int n, const std::vector<std::uint64_t>& words, double omega, double delta, double a) {
            return johnson_bound_check(BinaryCode::make(n, words), omega, delta, a);
        },
        py::arg("n"), py::arg("words"), py::arg("omega"), py::arg("delta"), py::arg("a"));
    m.def(
        "random_constant_weight_code",
        [](int n, int weight, int m_words, std::uint64_t seed) {
            return random_constant_weight_code(n, weight, m_words, seed).words;
        },
        py::arg("n"), py::arg("weight"), py::arg("m"), py::arg("seed"));
}
