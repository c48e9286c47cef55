#include <catch2/catch_amalgamated.hpp>

#include "entsim/copies.hpp"
#include "entsim/states.hpp"

#include <bit>
#include <cmath>

#include "oracles.hpp"

using namespace entsim;
using Catch::Approx;

TEST_CASE("log_binomial", "[copies]") {
    REQUIRE(log_binomial(4, 2) == Approx(std::log2(6.0)).margin(1e-12));
    REQUIRE(log_binomial(17, 0) == Approx(0.0).margin(1e-12));
    REQUIRE(log_binomial(17, 17) == Approx(0.0).margin(1e-12));
    REQUIRE_THROWS_AS(log_binomial(4, 5), std::out_of_range);

    SECTION("matches integer arithmetic for n <= 60") {
        for (std::uint64_t n = 1; n <= 60; ++n) {
            for (std::uint64_t k = 0; k <= n; ++k) {
                const double reference = oracles::log2_big(oracles::big_binomial(n, k));
                REQUIRE(log_binomial(n, k) == Approx(reference).margin(1e-11));
            }
        }
    }

    SECTION("matches the big-integer oracle at n = 1000") {
        const double reference = oracles::log2_big(oracles::big_binomial(1000, 500));
        REQUIRE(log_binomial(1000, 500) == Approx(reference).epsilon(1e-9));
    }
}

TEST_CASE("expand_copies sector probabilities", "[copies]") {
    SECTION("two Bell-like copies split 1/4, 1/2, 1/4") {
        const auto ws = expand_copies(std::sqrt(0.5), 2);
        REQUIRE(sector_prob(ws, 0) == Approx(0.25).margin(1e-12));
        REQUIRE(sector_prob(ws, 1) == Approx(0.5).margin(1e-12));
        REQUIRE(sector_prob(ws, 2) == Approx(0.25).margin(1e-12));
    }

    SECTION("a = 1 puts all mass at weight 0") {
        const auto ws = expand_copies(1.0, 7);
        REQUIRE(sector_prob(ws, 0) == 1.0);
        for (std::uint64_t k = 1; k <= 7; ++k) REQUIRE(sector_prob(ws, k) == 0.0);
    }

    SECTION("a^2 = 0.3, n = 4 matches the 16-string enumeration") {
        const auto ws = expand_copies(std::sqrt(0.3), 4);
        const auto probs = oracles::string_probs(std::sqrt(0.3), 4);
        for (std::uint64_t k = 0; k <= 4; ++k) {
            double sector = 0.0;
            for (std::size_t x = 0; x < probs.size(); ++x) {
                if (static_cast<std::uint64_t>(std::popcount(x)) == k) sector += probs[x];
            }
            REQUIRE(sector_prob(ws, k) == Approx(sector).margin(1e-10));
        }
    }

    SECTION("input validation") {
        REQUIRE_THROWS_AS(expand_copies(1.2, 4), std::invalid_argument);
        REQUIRE_THROWS_AS(expand_copies(0.5, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(expand_copies(0.5, kMaxCopies + 1), std::invalid_argument);
        REQUIRE_THROWS_AS(sector_prob(expand_copies(0.5, 4), 5), std::out_of_range);
    }
}

TEST_CASE("sector_prob spot values", "[copies]") {
    REQUIRE(sector_prob(expand_copies(std::sqrt(0.5), 2), 1) == Approx(0.5).margin(1e-12));
    REQUIRE(sector_prob(expand_copies(1.0, 5), 0) == 1.0);
    // 4 * 0.9^3 * 0.1
    REQUIRE(sector_prob(expand_copies(std::sqrt(0.9), 4), 1) ==
            Approx(0.2916).margin(1e-12));
}

TEST_CASE("sector probabilities sum to one", "[copies]") {
    const double a_values[] = {0.0, 0.13, std::sqrt(0.3), std::sqrt(0.5), 0.9, 1.0};
    const std::uint64_t n_values[] = {1, 2, 17, 300, 10000};
    for (double a : a_values) {
        for (std::uint64_t n : n_values) {
            const auto ws = expand_copies(a, n);
            double total = 0.0;
            for (std::uint64_t k = 0; k <= n; ++k) total += sector_prob(ws, k);
            REQUIRE(total == Approx(1.0).margin(1e-9));
        }
    }
}

TEST_CASE("typical_subspace", "[copies]") {
    SECTION("uniform case keeps budget/2^n of the mass") {
        const auto ts = typical_subspace(expand_copies(std::sqrt(0.5), 4), 8);
        REQUIRE(ts.mass == Approx(0.5).margin(1e-12));
        REQUIRE(ts.dim == 8.0);
    }

    SECTION("a^2 = 0.9, n = 4, budget 4 keeps the right strings") {
        const auto ws = expand_copies(std::sqrt(0.9), 4);
        const auto ts = typical_subspace(ws, 4);
        REQUIRE(ts.kept[0] == 1.0);
        REQUIRE(ts.kept[1] == 3.0);
        REQUIRE(ts.mass == Approx(0.8748).margin(1e-10));

        // Greedy optimality against all string subsets of size <= 4.
        const auto probs = oracles::string_probs(std::sqrt(0.9), 4);
        REQUIRE(ts.mass == Approx(oracles::best_subset_mass(probs, 4)).margin(1e-10));
    }

    SECTION("budget covering the whole space keeps everything") {
        const auto ts = typical_subspace(expand_copies(0.77, 4), 16);
        REQUIRE(ts.mass == 1.0);
        REQUIRE(ts.dim == 16.0);
        const auto bigger = typical_subspace(expand_copies(0.77, 4), 1000);
        REQUIRE(bigger.mass == 1.0);
    }

    SECTION("mass is non-decreasing in the budget") {
        const auto ws = expand_copies(std::sqrt(0.3), 10);
        double prev = 0.0;
        for (std::uint64_t budget = 1; budget <= 1024; budget *= 2) {
            const double mass = typical_subspace(ws, budget).mass;
            REQUIRE(mass >= prev - 1e-12);
            prev = mass;
        }
        REQUIRE(prev == 1.0);
    }

    SECTION("budget must be positive") {
        REQUIRE_THROWS_AS(typical_subspace(expand_copies(0.5, 4), 0), std::invalid_argument);
    }

    SECTION("log-space path agrees with exact integer greedy at n = 60") {
        const double a = std::sqrt(0.85);
        const auto ws = expand_copies(a, 60);
        for (std::uint64_t m : {5ull, 20ull, 35ull, 50ull}) {
            const auto ts = typical_subspace_pow2(ws, m);

            // Exact greedy with big-integer counts and long-double mass.
            oracles::BigInt remaining = oracles::BigInt(1) << static_cast<unsigned>(m);
            long double mass = 0.0L;
            for (std::uint64_t k = 0; k <= 60 && remaining > 0; ++k) {
                oracles::BigInt take = oracles::big_binomial(60, k);
                if (take > remaining) take = remaining;
                mass += take.convert_to<long double>() *
                        std::pow(static_cast<long double>(a * a), 60.0L - k) *
                        std::pow(1.0L - static_cast<long double>(a * a), 1.0L * k);
                remaining -= take;
            }
            REQUIRE(ts.mass == Approx(static_cast<double>(mass)).margin(1e-11));
        }
    }
}

TEST_CASE("expected_concentration_yield", "[copies]") {
    SECTION("two Bell-like copies yield half an ebit") {
        // Brute force over the three sectors: 1/4*0 + 1/2*1 + 1/4*0.
        REQUIRE(expected_concentration_yield(expand_copies(std::sqrt(0.5), 2)) ==
                Approx(0.5).margin(1e-12));
    }

    SECTION("product states yield nothing") {
        REQUIRE(expected_concentration_yield(expand_copies(1.0, 100)) == 0.0);
        REQUIRE(expected_concentration_yield(expand_copies(0.0, 100)) == 0.0);
    }

    SECTION("per-copy yield converges to the entropy") {
        const double h = oracles::binary_entropy_ld(0.3L);
        const double y20 = expected_concentration_yield(expand_copies(std::sqrt(0.3), 20)) / 20.0;
        const double y2000 =
            expected_concentration_yield(expand_copies(std::sqrt(0.3), 2000)) / 2000.0;
        REQUIRE(std::abs(y2000 - h) < 0.02);
        REQUIRE(std::abs(y2000 - h) < std::abs(y20 - h));
    }

    SECTION("never beats n times the entropy") {
        for (double a2 : {0.05, 0.3, 0.5, 0.77, 0.99}) {
            for (std::uint64_t n : {1ull, 3ull, 50ull, 700ull}) {
                const auto ws = expand_copies(std::sqrt(a2), n);
                const double bound = static_cast<double>(n) * binary_entropy(a2);
                REQUIRE(expected_concentration_yield(ws) <= bound + 1e-9);
            }
        }
    }
}

TEST_CASE("small-n quantities match literal enumeration", "[copies]") {
    for (int n = 1; n <= 4; ++n) {
        for (double a2 : {0.1, 0.5, 0.62}) {
            const double a = std::sqrt(a2);
            const auto ws = expand_copies(a, static_cast<std::uint64_t>(n));
            const auto probs = oracles::string_probs(a, n);

            for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(n); ++k) {
                double sector = 0.0;
                std::uint64_t count = 0;
                for (std::size_t x = 0; x < probs.size(); ++x) {
                    if (static_cast<std::uint64_t>(std::popcount(x)) == k) {
                        sector += probs[x];
                        ++count;
                    }
                }
                REQUIRE(sector_prob(ws, k) == Approx(sector).margin(1e-10));
                REQUIRE(std::exp2(ws.log2_multiplicity(k)) ==
                        Approx(static_cast<double>(count)).margin(1e-10));
            }

            for (std::uint64_t budget = 1; budget <= probs.size(); ++budget) {
                const double greedy = typical_subspace(ws, budget).mass;
                REQUIRE(greedy == Approx(oracles::best_subset_mass(probs, budget)).margin(1e-10));
            }
        }
    }
}
