#include "entsim/copies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace entsim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2(2^x + 2^y), stable for any ordering.
double log2_add(double x, double y) {
    if (x == kNegInf) return y;
    if (y == kNegInf) return x;
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

// log2(2^x - 2^y) for y <= x, stable when the two are close.
double log2_sub(double x, double y) {
    if (y == kNegInf) return x;
    const double d = y - x;
    if (d >= 0.0) return kNegInf;
    return x + std::log2(-std::expm1(d * M_LN2));
}

// Exact C(n,k) for n <= 62; the multiplicative recurrence stays inside
// uint64 range there.
std::uint64_t exact_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c;
}

} // namespace

double log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::out_of_range("log_binomial: k > n");
    return (std::lgamma(static_cast<double>(n) + 1.0) -
            std::lgamma(static_cast<double>(k) + 1.0) -
            std::lgamma(static_cast<double>(n - k) + 1.0)) /
           M_LN2;
}

WeightSectorState::WeightSectorState(double a, std::uint64_t n) : a_(a), n_(n) {
    if (a_ < 0.0 || a_ > 1.0) {
        throw std::invalid_argument("WeightSectorState: amplitude outside [0, 1]");
    }
    if (n_ < 1 || n_ > kMaxCopies) {
        throw std::invalid_argument("WeightSectorState: copy count outside [1, 1e6]");
    }
    b_ = std::sqrt(1.0 - a_ * a_);

    // Everything in base-2 logs: C(n,k) a^(2(n-k)) b^(2k) underflows past
    // n ~ 1000 in linear space. a or b may be exactly 0; skipping the
    // zero-exponent factor keeps 0 * log(0) out of the sums.
    const double la2 = a_ > 0.0 ? std::log2(a_ * a_) : kNegInf;
    const double lb2 = b_ > 0.0 ? std::log2(b_ * b_) : kNegInf;
    log2_mult_.resize(n_ + 1);
    log2_sector_.resize(n_ + 1);
    for (std::uint64_t k = 0; k <= n_; ++k) {
        log2_mult_[k] = n_ <= 62 ? std::log2(static_cast<double>(exact_binomial(n_, k)))
                                 : log_binomial(n_, k);
        double lp = log2_mult_[k];
        if (n_ - k > 0) lp += static_cast<double>(n_ - k) * la2;
        if (k > 0) lp += static_cast<double>(k) * lb2;
        log2_sector_[k] = lp;
    }
}

void WeightSectorState::check_weight(std::uint64_t k) const {
    if (k > n_) throw std::out_of_range("WeightSectorState: weight out of range");
}

double WeightSectorState::log2_multiplicity(std::uint64_t k) const {
    check_weight(k);
    return log2_mult_[k];
}

double WeightSectorState::log2_string_prob(std::uint64_t k) const {
    check_weight(k);
    return log2_sector_[k] - log2_mult_[k];
}

double WeightSectorState::log2_sector_prob(std::uint64_t k) const {
    check_weight(k);
    return log2_sector_[k];
}

double WeightSectorState::sector_prob(std::uint64_t k) const {
    check_weight(k);
    return std::exp2(log2_sector_[k]);
}

WeightSectorState expand_copies(double a, std::uint64_t n) { return WeightSectorState(a, n); }

double sector_prob(const WeightSectorState& ws, std::uint64_t k) { return ws.sector_prob(k); }

namespace {

// Sector visit order by descending per-string probability: the a^2-heavy
// low-weight strings first when a >= b, the reverse otherwise. Ties (a == b)
// make every order optimal.
std::vector<std::uint64_t> sector_order(const WeightSectorState& ws) {
    std::vector<std::uint64_t> order(ws.n() + 1);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    if (ws.a() < ws.b()) std::reverse(order.begin(), order.end());
    return order;
}

TypicalSubspace take_everything(const WeightSectorState& ws) {
    TypicalSubspace ts;
    ts.kept.resize(ws.n() + 1);
    for (std::uint64_t k = 0; k <= ws.n(); ++k) {
        ts.kept[k] = ws.n() <= 62 ? static_cast<double>(exact_binomial(ws.n(), k))
                                  : std::exp2(ws.log2_multiplicity(k));
    }
    ts.log2_dim = static_cast<double>(ws.n());
    ts.dim = std::exp2(ts.log2_dim);
    ts.mass = 1.0; // retaining every string is the identity projector
    return ts;
}

// Greedy fill with the remaining budget tracked as log2(count). Used once
// sector sizes outgrow exact 53-bit arithmetic.
TypicalSubspace fill_log_space(const WeightSectorState& ws, double log2_budget) {
    TypicalSubspace ts;
    ts.kept.assign(ws.n() + 1, 0.0);
    double remaining = log2_budget;
    double used = kNegInf;
    double mass = 0.0;
    for (std::uint64_t k : sector_order(ws)) {
        const double lc = ws.log2_multiplicity(k);
        if (lc <= remaining) {
            ts.kept[k] = std::exp2(lc);
            mass += std::exp2(ws.log2_sector_prob(k));
            used = log2_add(used, lc);
            remaining = log2_sub(remaining, lc);
            if (remaining == kNegInf) break;
        } else {
            ts.kept[k] = std::exp2(remaining);
            mass += std::exp2(remaining + ws.log2_string_prob(k));
            used = log2_add(used, remaining);
            break;
        }
    }
    ts.log2_dim = std::min(used, log2_budget);
    ts.dim = std::exp2(ts.log2_dim);
    ts.mass = std::min(mass, 1.0);
    return ts;
}

// Exact greedy fill for n <= 52: counts and budgets stay below 2^53, so
// plain double arithmetic on them is integer-exact.
TypicalSubspace fill_exact(const WeightSectorState& ws, double budget) {
    TypicalSubspace ts;
    ts.kept.assign(ws.n() + 1, 0.0);
    double remaining = budget;
    double dim = 0.0;
    double mass = 0.0;
    for (std::uint64_t k : sector_order(ws)) {
        const double count = static_cast<double>(exact_binomial(ws.n(), k));
        const double take = std::min(count, remaining);
        ts.kept[k] = take;
        dim += take;
        mass += take * std::exp2(ws.log2_string_prob(k));
        remaining -= take;
        if (remaining <= 0.0) break;
    }
    ts.dim = dim;
    ts.log2_dim = std::log2(dim);
    ts.mass = std::min(mass, 1.0);
    return ts;
}

} // namespace

TypicalSubspace typical_subspace(const WeightSectorState& ws, std::uint64_t dim_budget) {
    if (dim_budget < 1) {
        throw std::invalid_argument("typical_subspace: budget must be at least 1");
    }
    if (ws.n() < 64 && dim_budget >= (std::uint64_t{1} << ws.n())) {
        return take_everything(ws);
    }
    if (ws.n() <= 52) {
        return fill_exact(ws, static_cast<double>(dim_budget));
    }
    return fill_log_space(ws, std::log2(static_cast<double>(dim_budget)));
}

TypicalSubspace typical_subspace_pow2(const WeightSectorState& ws, std::uint64_t log2_budget) {
    if (log2_budget >= ws.n()) {
        return take_everything(ws);
    }
    if (ws.n() <= 52) {
        return fill_exact(ws, std::exp2(static_cast<double>(log2_budget)));
    }
    return fill_log_space(ws, static_cast<double>(log2_budget));
}

double expected_concentration_yield(const WeightSectorState& ws) {
    double yield = 0.0;
    for (std::uint64_t k = 0; k <= ws.n(); ++k) {
        const double p = ws.sector_prob(k);
        if (p > 0.0) yield += p * ws.log2_multiplicity(k);
    }
    return yield;
}

} // namespace entsim
