#pragma once

#include <cstdint>
#include <vector>

// Desk-scale combinatorial oracles: exact distance distributions of small
// binary codes, the exact two-sphere intersection count Z(t, w), and a
// property checker for the Johnson-type cardinality bound on constant
// weight codes.  Everything here is exact integer arithmetic.

namespace bsc {

/// Binary code of length n <= 64, words packed into uint64_t (bit i = coord i).
struct BinaryCode {
    int n = 0;
    std::vector<std::uint64_t> words;

    /// Validates length and distinctness.
    static BinaryCode make(int n, std::vector<std::uint64_t> words);

    std::size_t size() const { return words.size(); }
    bool constant_weight() const;
};

/// Distance distribution: counts[i] is the number of ordered codeword pairs
/// at Hamming distance i, so B_i = counts[i] / M exactly.
struct CodeSpectrum {
    int n = 0;
    std::uint64_t m = 0;
    std::vector<std::uint64_t> counts;

    double b(int i) const { return static_cast<double>(counts[i]) / static_cast<double>(m); }
};

/// Exact pairwise distance distribution, O(M^2 n / 64).
CodeSpectrum spectrum(const BinaryCode& code);

/// Exact C(n, k); 0 for k < 0 or k > n.  Multiplicative recurrence with
/// 128-bit intermediates, valid through n = 64.
std::uint64_t binomial_exact(int n, int k);

/// Exact |Z(t, w)| = C((1-w)n, (t - w/2)n) * C(wn, wn/2): the number of
/// points equidistant (t*n) from two fixed words at distance w*n.
/// All of t*n, w*n, w*n/2 and (t - w/2)*n must be integral.
std::uint64_t z_count(int n, double t, double omega);

/// Outcome of one Johnson-type bound check on a constant-weight code.
/// Premises: the spectrum condition sum_{0 < i < wn} B_i <= delta * M and the
/// radius condition t <= (1 - sqrt(1 - 2(1-delta) w + 2a)) / 2; conclusion:
/// M <= w / a.  implication_ok records premises => conclusion.
struct JohnsonBoundVerdict {
    bool premise_spectrum;
    bool premise_radius;
    bool conclusion;
    bool implication_ok;
    double omega;
    double delta;
    double a;
    std::uint64_t seed = 0;  // generator seed when the code was sampled
};

JohnsonBoundVerdict johnson_bound_check(const BinaryCode& code, double omega, double delta,
                                        double a);

/// Plotkin-type step, exact in integers:
/// average distance of a constant-weight-w code <= 2 (w/n)(1 - w/n) n,
/// i.e. n * sum_i i*counts[i] <= 2 w (n-w) M^2.
bool average_distance_bound_ok(const BinaryCode& code);

/// m distinct uniform weight-w words, seeded; m must not exceed C(n, w).
BinaryCode random_constant_weight_code(int n, int weight, int m, std::uint64_t seed);

}  // namespace bsc
