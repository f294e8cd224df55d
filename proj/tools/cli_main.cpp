// Command-line front end: critical-rate tables, bound curves as CSV/JSON,
// spectrum-exponent evaluation and the verification suites.
//
// Data goes to stdout (or --out FILE); diagnostics go to stderr.  Output is
// byte-identical for identical inputs and seeds.  Exit codes: 0 on success,
// 1 when a computation or verification suite fails, 2 on domain errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsc_exponents/combinatorial.hpp"
#include "bsc_exponents/critical_rates.hpp"
#include "bsc_exponents/exponent_bounds.hpp"
#include "bsc_exponents/parallel.hpp"
#include "bsc_exponents/report.hpp"
#include "bsc_exponents/rootfind.hpp"
#include "bsc_exponents/scalar_functions.hpp"
#include "bsc_exponents/spectrum_mu.hpp"
#include "bsc_exponents/verify.hpp"
#include "bsc_exponents/version.hpp"

namespace {

using bsc::format_double17;
using bsc::MetaEntry;
using bsc::MetaKind;
using bsc::TableColumn;

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
    cmd->add_option("--format", opts->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts->out_path, "Write the table to a file instead of stdout");
}

TableColumn number_column(std::string name, const std::vector<double>& values) {
    TableColumn col{std::move(name), true, {}};
    col.cells.reserve(values.size());
    for (double v : values) col.cells.push_back(format_double17(v));
    return col;
}

int emit(const std::vector<TableColumn>& columns, const std::vector<MetaEntry>& metadata,
         const OutputOptions& opts) {
    std::ostringstream body;
    if (opts.format == "json") {
        bsc::write_json(body, columns, metadata);
    } else {
        bsc::write_csv(body, columns);
    }
    if (opts.out_path.empty()) {
        std::cout << body.str();
        return 0;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
        return 2;
    }
    file << body.str();
    std::cerr << "wrote " << (columns.empty() ? 0 : columns.front().cells.size()) << " rows to "
              << opts.out_path << "\n";
    return 0;
}

std::vector<MetaEntry> base_metadata() {
    return {MetaEntry{"tool_version", bsc::kVersion, MetaKind::kString}};
}

int run_constants(const OutputOptions& opts, double tol) {
    const bsc::VerifyReport rep = bsc::verify_constants(tol);
    const bsc::GlobalConstants& gc = bsc::global_constants();

    const char* names[] = {"tau0", "r0", "p0", "p1"};
    const double values[] = {gc.tau0, gc.r0, gc.p0, gc.p1};
    const double refs[] = {0.054507, 0.30524, 0.036587, 0.0078176};
    const double tols[] = {tol > 0 ? tol : 1e-5, tol > 0 ? tol : 1e-5, tol > 0 ? tol : 1e-5,
                           tol > 0 ? tol : 1e-6};

    TableColumn cname{"name", false, {}};
    TableColumn cval{"value", true, {}};
    TableColumn cref{"reference", true, {}};
    TableColumn cdelta{"delta", true, {}};
    TableColumn ctol{"tolerance", true, {}};
    TableColumn cpass{"pass", false, {}};
    for (int i = 0; i < 4; ++i) {
        cname.cells.push_back(names[i]);
        cval.cells.push_back(format_double17(values[i]));
        cref.cells.push_back(format_double17(refs[i]));
        cdelta.cells.push_back(format_double17(std::abs(values[i] - refs[i])));
        ctol.cells.push_back(format_double17(tols[i]));
        cpass.cells.push_back(std::abs(values[i] - refs[i]) <= tols[i] ? "true" : "false");
    }
    const double s = std::sqrt(gc.tau0 * (1.0 - gc.tau0));
    const double eq_resid = std::abs((1.0 - 2.0 * gc.tau0) * (1.0 + 0.5 / s) -
                                     std::log((1.0 - gc.tau0) / gc.tau0));
    auto meta = base_metadata();
    meta.push_back({"tau0_equation_residual", format_double17(eq_resid), MetaKind::kNumber});
    const int rc = emit({cname, cval, cref, cdelta, ctol, cpass}, meta, opts);
    if (rc != 0) return rc;
    std::cerr << "tau0 defining-equation residual = " << format_double17(eq_resid) << "\n";
    return rep.pass ? 0 : 1;
}

int run_rates(const OutputOptions& opts, double p) {
    const bsc::ChannelParam ch(p);
    const bsc::CriticalRates rates = bsc::critical_rate_set(ch);
    std::vector<TableColumn> cols = {
        number_column("p", {rates.p}),          number_column("C", {rates.capacity}),
        number_column("Rcrit", {rates.r_crit}), number_column("R1", {rates.r1}),
        number_column("R2", {rates.r2}),        number_column("Rmin", {rates.r_min}),
    };
    return emit(cols, base_metadata(), opts);
}

int run_figure1(const OutputOptions& opts, double p_min, double p_max, int points,
                bool lenient) {
    if (!(p_min > 0.0) || !(p_max < 0.5) || !(p_min < p_max) || points < 2) {
        std::cerr << "error: figure1 grid must satisfy 0 < p-min < p-max < 1/2, points >= 2\n";
        return 2;
    }
    std::vector<double> p(static_cast<std::size_t>(points));
    std::vector<double> c1(p.size()), c2(p.size()), ccrit(p.size()), ccap(p.size());
    std::vector<char> ok(p.size(), 1);
    bsc::parallel_for(p.size(), [&](std::size_t i) {
        p[i] = p_min + (p_max - p_min) * static_cast<double>(i) / (points - 1);
        try {
            const bsc::ChannelParam ch(p[i]);
            c1[i] = bsc::r1(ch);
            c2[i] = bsc::r2(ch);
            ccrit[i] = bsc::r_crit(ch);
            ccap[i] = bsc::capacity(ch);
        } catch (const std::exception&) {
            ok[i] = 0;
        }
    });
    std::vector<double> gp, g1, g2, gcrit, gcap;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!ok[i]) {
            std::cerr << "warning: solver failure at p = " << format_double17(p[i]) << "\n";
            if (!lenient) {
                std::cerr << "error: rerun with --lenient to skip failed points\n";
                return 1;
            }
            continue;
        }
        gp.push_back(p[i]);
        g1.push_back(c1[i]);
        g2.push_back(c2[i]);
        gcrit.push_back(ccrit[i]);
        gcap.push_back(ccap[i]);
    }
    auto meta = base_metadata();
    meta.push_back({"points", std::to_string(gp.size()), MetaKind::kNumber});
    return emit({number_column("p", gp), number_column("R1", g1), number_column("R2", g2),
                 number_column("Rcrit", gcrit), number_column("C", gcap)},
                meta, opts);
}

int run_figure2(const OutputOptions& opts, double p, int points) {
    const bsc::ChannelParam ch(p);
    const bsc::BoundCurve curve = bsc::bound_curve(ch, points);
    std::vector<double> r, lo, up;
    TableColumn tags{"region_tag", false, {}};
    for (const auto& row : curve.rows) {
        r.push_back(row.rate);
        lo.push_back(row.e_low);
        up.push_back(row.e_up);
        tags.cells.push_back(bsc::region_tag_name(row.region));
    }
    auto meta = base_metadata();
    meta.push_back({"p", format_double17(p), MetaKind::kNumber});
    meta.push_back({"grid_size", std::to_string(curve.rows.size()), MetaKind::kNumber});
    meta.push_back({"seam_rates",
                    "[" + format_double17(curve.rates.r_min) + ", " +
                        format_double17(curve.rates.r2) + ", " +
                        format_double17(curve.rates.r_crit) + "]",
                    MetaKind::kRaw});
    return emit({number_column("R", r), number_column("E_low", lo), number_column("E_up", up),
                 tags},
                meta, opts);
}

int run_mu(const OutputOptions& opts, double rate, double alpha, double omega,
           const std::string& method, bool all, double tol) {
    const bsc::SpectrumArgs args = bsc::SpectrumArgs::make(rate, alpha, omega);
    const double quad_tol = tol > 0 ? tol : 1e-12;

    TableColumn cm{"method", false, {}};
    TableColumn cv{"mu", true, {}};
    auto add = [&](const char* name, double value) {
        cm.cells.push_back(name);
        cv.cells.push_back(format_double17(value));
    };

    int rc = 0;
    std::vector<double> seen;
    auto eval = [&](const std::string& m) {
        if (m == "quad") {
            const bsc::QuadratureResult q = bsc::mu_integral(args, quad_tol);
            if (!q.converged) {
                std::cerr << "error: quadrature did not converge (error estimate "
                          << format_double17(q.error_estimate) << ")\n";
                rc = 1;
            }
            add("quad", q.value);
            seen.push_back(q.value);
        } else if (m == "closed") {
            const double v = args.omega > 0 ? bsc::mu_closed(args) : 0.0;
            add("closed", v);
            seen.push_back(v);
        } else if (m == "half") {
            if (std::abs(args.alpha - 0.5) > 1e-9) {
                throw std::domain_error("mu --method half requires alpha = 1/2");
            }
            const double v = bsc::mu_half(args.rate, args.omega);
            add("half", v);
            seen.push_back(v);
        }
    };

    if (all) {
        eval("quad");
        eval("closed");
        if (std::abs(args.alpha - 0.5) <= 1e-9) eval("half");
        double spread = 0.0;
        for (double a : seen)
            for (double b : seen) spread = std::max(spread, std::abs(a - b));
        add("spread", spread);
    } else {
        eval(method);
    }

    // At the omega = G(alpha, tau) boundary the value must satisfy
    // mu = l_func(G) + rate - 1; report the residual whenever we are there.
    const double g = bsc::g_func(args.alpha, args.tau);
    if (std::abs(args.omega - g) <= 1e-9 && !seen.empty()) {
        const double resid = std::abs(seen.front() - (bsc::l_func(g) + args.rate - 1.0));
        add("g_boundary_identity_residual", resid);
    }

    auto meta = base_metadata();
    meta.push_back({"rate", format_double17(args.rate), MetaKind::kNumber});
    meta.push_back({"alpha", format_double17(args.alpha), MetaKind::kNumber});
    meta.push_back({"omega", format_double17(args.omega), MetaKind::kNumber});
    meta.push_back({"tau", format_double17(args.tau), MetaKind::kNumber});
    const int erc = emit({cm, cv}, meta, opts);
    return erc != 0 ? erc : rc;
}

int run_verify(const std::string& suite, std::uint64_t seed, long cases, double tol) {
    bsc::VerifyReport rep;
    if (suite == "identities") {
        rep = bsc::verify_identities();
    } else if (suite == "constants") {
        rep = bsc::verify_constants(tol);
    } else if (suite == "lemma2") {
        rep = bsc::verify_johnson(seed, cases);
    } else if (suite == "oracle") {
        rep = bsc::verify_oracle(seed, std::min<long>(cases, 2000), tol > 0 ? tol : 1e-8);
    }
    std::cout << "suite: " << rep.suite << "\n";
    for (const auto& line : rep.lines) std::cout << "  " << line << "\n";
    std::cout << "cases: " << rep.cases << "\n";
    std::cout << "worst residual: " << format_double17(rep.max_residual) << "\n";
    std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reliability-function bounds for the binary symmetric channel"};
    app.require_subcommand(1);

    OutputOptions out_constants, out_rates, out_fig1, out_fig2, out_mu;
    double tol = 0.0;
    double p = 0.01;
    double p_min = 0.001, p_max = 0.49;
    int points = 512;
    bool lenient = false;
    bool as_json = false;
    double rate = 0.0, alpha = 0.0, omega = 0.0;
    std::string method = "closed";
    bool all_methods = false;
    std::string suite;
    std::uint64_t seed = 42;
    long cases = 10000;

    CLI::App* c_constants = app.add_subcommand(
        "constants", "Universal constants (tau0, r0, p0, p1) with reference deltas");
    add_output_flags(c_constants, &out_constants);
    c_constants->add_flag("--json", as_json, "Shorthand for --format json");
    c_constants->add_option("--tol", tol, "Override the per-constant pass tolerances");

    CLI::App* c_rates = app.add_subcommand("rates", "Critical rates for one channel");
    c_rates->add_option("--p", p, "Crossover probability")->required();
    add_output_flags(c_rates, &out_rates);

    CLI::App* c_fig1 =
        app.add_subcommand("figure1", "R1, R2, Rcrit and C over a grid of channels");
    c_fig1->add_option("--p-min", p_min, "Grid start")->capture_default_str();
    c_fig1->add_option("--p-max", p_max, "Grid end")->capture_default_str();
    c_fig1->add_option("--points", points, "Grid size")->capture_default_str();
    c_fig1->add_flag("--lenient", lenient, "Skip points whose solver fails (warn only)");
    add_output_flags(c_fig1, &out_fig1);

    CLI::App* c_fig2 =
        app.add_subcommand("figure2", "Lower/upper reliability envelopes over the rate axis");
    c_fig2->add_option("--p", p, "Crossover probability")->required();
    c_fig2->add_option("--points", points, "Grid size")->capture_default_str();
    add_output_flags(c_fig2, &out_fig2);

    CLI::App* c_mu = app.add_subcommand("mu", "Spectrum exponent mu(R, alpha, omega)");
    c_mu->add_option("--rate", rate, "Code rate")->required();
    c_mu->add_option("--alpha", alpha, "Constant weight")->required();
    c_mu->add_option("--omega", omega, "Pair distance")->required();
    c_mu->add_option("--method", method, "Evaluation method")
        ->check(CLI::IsMember({"quad", "closed", "half"}))
        ->capture_default_str();
    c_mu->add_flag("--all", all_methods, "Evaluate every applicable method and their spread");
    c_mu->add_option("--tol", tol, "Quadrature tolerance");
    add_output_flags(c_mu, &out_mu);

    CLI::App* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("suite", suite, "identities | constants | lemma2 | oracle")
        ->required()
        ->check(CLI::IsMember({"identities", "constants", "lemma2", "oracle"}));
    c_verify->add_option("--seed", seed, "Randomized-suite seed")->capture_default_str();
    c_verify->add_option("--cases", cases, "Randomized-suite case count")->capture_default_str();
    c_verify->add_option("--tol", tol, "Residual tolerance override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_constants->parsed()) {
            if (as_json) out_constants.format = "json";
            return run_constants(out_constants, tol);
        }
        if (c_rates->parsed()) return run_rates(out_rates, p);
        if (c_fig1->parsed()) return run_figure1(out_fig1, p_min, p_max, points, lenient);
        if (c_fig2->parsed()) return run_figure2(out_fig2, p, points);
        if (c_mu->parsed()) return run_mu(out_mu, rate, alpha, omega, method, all_methods, tol);
        if (c_verify->parsed()) return run_verify(suite, seed, cases, tol);
    } catch (const bsc::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
