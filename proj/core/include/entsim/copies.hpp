#pragma once

#include <cstdint>
#include <vector>

namespace entsim {

inline constexpr std::uint64_t kMaxCopies = 1000000;

// log2 C(n, k) via lgamma; relative error below 1e-9, exact for small n.
double log_binomial(std::uint64_t n, std::uint64_t k);

// n i.i.d. copies of a|00> + b|11>, grouped by the Hamming weight k of the
// 2^n basis strings: every weight-k string carries squared amplitude
// a^(2(n-k)) b^(2k) and there are C(n,k) of them. All sector arithmetic is
// kept in base-2 logs; the linear-space products underflow past n ~ 1000.
class WeightSectorState {
  public:
    WeightSectorState(double a, std::uint64_t n);

    std::uint64_t n() const { return n_; }
    double a() const { return a_; }
    double b() const { return b_; }

    double log2_multiplicity(std::uint64_t k) const; // log2 C(n,k)
    double log2_string_prob(std::uint64_t k) const;  // log2 of one weight-k string's probability
    double log2_sector_prob(std::uint64_t k) const;
    double sector_prob(std::uint64_t k) const;

  private:
    void check_weight(std::uint64_t k) const;

    double a_;
    double b_;
    std::uint64_t n_;
    std::vector<double> log2_mult_;
    std::vector<double> log2_sector_;
};

WeightSectorState expand_copies(double a, std::uint64_t n);
double sector_prob(const WeightSectorState& ws, std::uint64_t k);

// Greedy best subspace of at most the requested dimension: strings retained
// in descending per-string probability, partial sectors allowed. `mass` is
// the retained probability, i.e. the best achievable projection fidelity at
// that rank.
struct TypicalSubspace {
    std::vector<double> kept; // strings retained per sector; exact below 2^53, saturating above
    double dim;               // total retained strings (saturates to +inf at large n)
    double log2_dim;          // scale of `dim`, exact even when `dim` saturates
    double mass;              // retained probability, in [0, 1]
};

TypicalSubspace typical_subspace(const WeightSectorState& ws, std::uint64_t dim_budget);

// Budget of 2^log2_budget strings; the form protocols use, since dilution
// budgets 2^m outgrow every integer type once m > 63.
TypicalSubspace typical_subspace_pow2(const WeightSectorState& ws, std::uint64_t log2_budget);

// sum_k P(k) log2 C(n,k): the exact expected ebit yield of a collective
// concentration measurement on the n copies.
double expected_concentration_yield(const WeightSectorState& ws);

} // namespace entsim
