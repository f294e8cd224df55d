#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-check suites shared by the CLI `verify` subcommand and the test
// binaries.  A suite fails iff some residual exceeds its tolerance (or a
// randomized property finds a counterexample).

namespace bsc {

struct VerifyReport {
    std::string suite;
    long cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    std::vector<std::string> lines;  // one human-readable line per sub-check
};

/// Analytic identities of the spectrum exponent:
///  - mu_half(h2(t), G(1/2,t)) = h2(t) + h2(G(1/2,t)) - 1 over a tau grid,
///  - mu_closed(R, a, G(a,t)) = l_func(G) + R - 1 over a 40x40 (a,t) grid,
///  - the crossing-distance identity
///    mu(R, a, omega1(p)) = (omega1/2) log2(1/(4pq)) + R + log2(1+2 sqrt(pq)) - 1
///    along the parametric sweep.
VerifyReport verify_identities(double tol_boundary = 1e-9, double tol_crossing = 1e-8);

/// Global constants against their published digits;
/// tol <= 0 keeps the per-constant defaults {1e-5, 1e-5, 1e-5, 1e-6}.
VerifyReport verify_constants(double tol = 0.0);

/// Randomized Johnson-bound property suite: `cases` seeded constant-weight
/// codes with premise-satisfying (omega, delta, a); passes iff no
/// counterexample and the exact Plotkin step holds on every sample.
VerifyReport verify_johnson(std::uint64_t seed, long cases = 10000);

/// Cross-method oracle: |mu_integral - mu_closed| and, at alpha = 1/2,
/// |mu_integral - mu_half| over `cases` admissible points.
VerifyReport verify_oracle(std::uint64_t seed, long cases = 1000, double tol = 1e-8);

}  // namespace bsc
