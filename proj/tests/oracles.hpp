// Test-only oracles, independent of the library's computation paths:
// long-double entropy sums, big-integer binomials, closed-form 2x2 spectra,
// and literal enumeration of n-copy states.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;

// -sum p_i log2 p_i evaluated in 80-bit arithmetic.
inline double entropy_ld(const std::vector<long double>& probs) {
    long double h = 0.0L;
    for (long double p : probs) {
        if (p > 0.0L) h -= p * std::log2(p);
    }
    return static_cast<double>(h);
}

inline double binary_entropy_ld(long double p) { return entropy_ld({p, 1.0L - p}); }

inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::out_of_range("big_binomial: k > n");
    BigInt c = 1;
    for (std::uint64_t i = 0; i < std::min(k, n - k); ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c;
}

// log2 of a positive big integer, good to double precision. Goes through the
// hex representation: the top 14 hex digits carry 56 bits, the rest is a
// power-of-16 scale.
inline double log2_big(const BigInt& value) {
    std::ostringstream hex;
    hex << std::hex << value;
    const std::string digits = hex.str();
    const std::size_t head = std::min<std::size_t>(digits.size(), 14);
    const auto top = std::stoull(digits.substr(0, head), nullptr, 16);
    return std::log2(static_cast<double>(top)) + 4.0 * static_cast<double>(digits.size() - head);
}

// Singular values of a 2x2 real matrix from the closed-form eigenvalues of
// its Gram matrix, descending.
inline std::pair<double, double> singular_values_2x2(double m00, double m01, double m10,
                                                     double m11) {
    const double g00 = m00 * m00 + m01 * m01;
    const double g01 = m00 * m10 + m01 * m11;
    const double g11 = m10 * m10 + m11 * m11;
    const double tr = g00 + g11;
    const double det = g00 * g11 - g01 * g01;
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return {std::sqrt((tr + disc) / 2.0), std::sqrt(std::max((tr - disc) / 2.0, 0.0))};
}

// Literal n-copy state sum_x a^(n-|x|) b^|x| |x>_A |x>_B as its 2^n x 2^n
// amplitude matrix (diagonal in the string basis).
inline Eigen::MatrixXcd n_copy_matrix(double a, int n) {
    const double b = std::sqrt(1.0 - a * a);
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        const int w = std::popcount(x);
        const auto idx = static_cast<Eigen::Index>(x);
        m(idx, idx) = std::pow(a, n - w) * std::pow(b, w);
    }
    return m;
}

// Every string probability of the n-copy state, by literal enumeration.
inline std::vector<double> string_probs(double a, int n) {
    const double b = std::sqrt(1.0 - a * a);
    std::vector<double> probs(std::size_t{1} << n);
    for (std::size_t x = 0; x < probs.size(); ++x) {
        const int w = std::popcount(x);
        probs[x] = std::pow(a * a, n - w) * std::pow(b * b, w);
    }
    return probs;
}

// Best probability mass over all string subsets of size <= budget, by
// exhaustive search. Only sane for 2^n <= ~16 and small budgets.
inline double best_subset_mass(const std::vector<double>& probs, std::size_t budget) {
    double best = 0.0;
    const std::size_t strings = probs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << strings); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > budget) continue;
        double mass = 0.0;
        for (std::size_t x = 0; x < strings; ++x) {
            if (mask & (std::size_t{1} << x)) mass += probs[x];
        }
        best = std::max(best, mass);
    }
    return best;
}

// Upper-tail 0.999 quantiles of the chi-square distribution, for
// goodness-of-fit at the 0.001 level (reference-table values).
inline double chi2_crit_999(int dof) {
    static const std::map<int, double> table = {
        {1, 10.827566170662733},  {2, 13.815510557964274},  {3, 16.26623619623813},
        {4, 18.46682695290317},   {5, 20.515005652432873},  {6, 22.457744484825323},
        {7, 24.321886347856854},  {8, 26.12448155837614},   {9, 27.877164871256568},
        {10, 29.58829844507442},  {11, 31.264133620239985}, {12, 32.90949040736021},
        {13, 34.52817897487089},  {14, 36.12327368039813},  {15, 37.69729821835383},
        {16, 39.252354790768464}, {17, 40.79021670690253},  {18, 42.31239633167996},
        {19, 43.82019596451753},  {20, 45.31474661812586},  {21, 46.797038041561315},
    };
    const auto it = table.find(dof);
    if (it == table.end()) throw std::out_of_range("chi2_crit_999: dof not tabulated");
    return it->second;
}

} // namespace oracles
