#include "bsc_exponents/combinatorial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bsc {

namespace {

bool near_integer(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) <= tol;
}

}  // namespace

BinaryCode BinaryCode::make(int n, std::vector<std::uint64_t> words) {
    if (n < 1 || n > 64) throw std::invalid_argument("BinaryCode: length must be in [1, 64]");
    const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (std::uint64_t w : words) {
        if ((w & ~mask) != 0) throw std::invalid_argument("BinaryCode: word exceeds length");
    }
    std::vector<std::uint64_t> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("BinaryCode: duplicate codewords");
    }
    return BinaryCode{n, std::move(words)};
}

bool BinaryCode::constant_weight() const {
    if (words.empty()) return true;
    const int w = std::popcount(words.front());
    return std::all_of(words.begin(), words.end(),
                       [w](std::uint64_t x) { return std::popcount(x) == w; });
}

CodeSpectrum spectrum(const BinaryCode& code) {
    CodeSpectrum s;
    s.n = code.n;
    s.m = code.words.size();
    s.counts.assign(static_cast<std::size_t>(code.n) + 1, 0);
    s.counts[0] = s.m;  // ordered pairs (x, x)
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            s.counts[static_cast<std::size_t>(
                std::popcount(code.words[i] ^ code.words[j]))] += 2;
        }
    }
    return s;
}

std::uint64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 64) throw std::overflow_error("binomial_exact: n > 64");
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    if (result > static_cast<unsigned __int128>(~0ULL)) {
        throw std::overflow_error("binomial_exact: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t z_count(int n, double t, double omega) {
    const double tn = t * n;
    const double wn = omega * n;
    const double half_wn = 0.5 * wn;
    const double outer_k = tn - half_wn;
    if (!near_integer(tn) || !near_integer(wn) || !near_integer(half_wn) ||
        !near_integer(outer_k)) {
        throw std::invalid_argument("z_count: t*n, w*n, w*n/2, (t - w/2)*n must all be integral");
    }
    if (t < 0.5 * omega - 1e-9) throw std::invalid_argument("z_count: t < omega/2");
    const int d = static_cast<int>(std::llround(wn));
    const int k = static_cast<int>(std::llround(outer_k));
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(binomial_exact(n - d, k)) * binomial_exact(d, d / 2);
    if (prod > static_cast<unsigned __int128>(~0ULL)) {
        throw std::overflow_error("z_count: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(prod);
}

JohnsonBoundVerdict johnson_bound_check(const BinaryCode& code, double omega, double delta,
                                        double a) {
    if (!code.constant_weight()) {
        throw std::invalid_argument("johnson_bound_check: code is not constant-weight");
    }
    if (!(a > 0.0)) throw std::invalid_argument("johnson_bound_check: a must be positive");
    const double m = static_cast<double>(code.words.size());
    const double t = static_cast<double>(std::popcount(code.words.front())) / code.n;

    const CodeSpectrum s = spectrum(code);
    // sum of B_i over 0 < i < w*n, as exact pair counts against delta*M^2
    std::uint64_t inner_pairs = 0;
    for (int i = 1; i < code.n + 1 && i < omega * code.n; ++i) {
        inner_pairs += s.counts[static_cast<std::size_t>(i)];
    }
    JohnsonBoundVerdict v{};
    v.omega = omega;
    v.delta = delta;
    v.a = a;
    v.premise_spectrum = static_cast<double>(inner_pairs) <= delta * m * m;
    const double disc = 1.0 - 2.0 * (1.0 - delta) * omega + 2.0 * a;
    v.premise_radius = disc >= 0.0 && t <= 0.5 * (1.0 - std::sqrt(disc));
    v.conclusion = m <= omega / a;
    v.implication_ok = !(v.premise_spectrum && v.premise_radius) || v.conclusion;
    return v;
}

bool average_distance_bound_ok(const BinaryCode& code) {
    if (!code.constant_weight() || code.words.empty()) {
        throw std::invalid_argument("average_distance_bound_ok: constant-weight code required");
    }
    const CodeSpectrum s = spectrum(code);
    unsigned __int128 weighted = 0;
    for (std::size_t i = 1; i < s.counts.size(); ++i) {
        weighted += static_cast<unsigned __int128>(i) * s.counts[i];
    }
    const auto w = static_cast<unsigned __int128>(std::popcount(code.words.front()));
    const auto m = static_cast<unsigned __int128>(code.words.size());
    const auto n = static_cast<unsigned __int128>(code.n);
    // n * sum_i i*counts[i] <= 2 w (n - w) M^2, all exact
    return n * weighted <= 2 * w * (n - w) * m * m;
}

BinaryCode random_constant_weight_code(int n, int weight, int m, std::uint64_t seed) {
    if (n < 1 || n > 64 || weight < 0 || weight > n) {
        throw std::invalid_argument("random_constant_weight_code: bad (n, weight)");
    }
    if (static_cast<std::uint64_t>(m) > binomial_exact(n, weight)) {
        throw std::invalid_argument("random_constant_weight_code: m exceeds C(n, weight)");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> words;
    words.reserve(static_cast<std::size_t>(m));
    while (words.size() < static_cast<std::size_t>(m)) {
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        std::uint64_t word = 0;
        for (int i = 0; i < weight; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
            word |= 1ULL << idx[static_cast<std::size_t>(i)];
        }
        if (std::find(words.begin(), words.end(), word) == words.end()) {
            words.push_back(word);
        }
    }
    BinaryCode code{n, std::move(words)};
    return code;
}

}  // namespace bsc
