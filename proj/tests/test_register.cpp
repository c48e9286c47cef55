#include <catch2/catch_amalgamated.hpp>

#include "entsim/register.hpp"

#include <cmath>

using namespace entsim;
using Catch::Approx;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("single-qubit gates", "[register]") {
    SECTION("X flips |0> to |1>") {
        Register reg(1);
        reg.apply(gates::pauli_x(), 0);
        REQUIRE(std::norm(reg.amp(1)) == Approx(1.0).margin(1e-12));
    }

    SECTION("H is an involution") {
        Register reg = Register::from_amplitudes(
            2, {{0.5, 0.1}, {0.3, -0.2}, {0.4, 0.4}, {0.1, 0.5291502622129181}});
        const Register before = reg;
        reg.apply(gates::hadamard(), 1);
        reg.apply(gates::hadamard(), 1);
        REQUIRE(fidelity(reg, before) == Approx(1.0).margin(1e-12));
        REQUIRE(reg.norm_sq() == Approx(1.0).margin(1e-12));
    }

    SECTION("non-unitary gates are rejected") {
        Register reg(1);
        Eigen::Matrix2cd bad;
        bad << 1, 0, 0, 2;
        REQUIRE_THROWS_AS(reg.apply(bad, 0), std::invalid_argument);
    }

    SECTION("targets are validated") {
        Register reg(2);
        REQUIRE_THROWS_AS(reg.apply(gates::pauli_x(), 2), std::out_of_range);
        REQUIRE_THROWS_AS(reg.apply(gates::cnot(), 0, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(Register(25), std::invalid_argument);
    }
}

TEST_CASE("CNOT builds a Bell pair", "[register]") {
    // (|00> + |10>)/sqrt(2), control = qubit 1.
    Register reg(2);
    reg.apply(gates::hadamard(), 1);
    reg.apply(gates::cnot(), 1, 0);
    REQUIRE(std::norm(reg.amp(0)) == Approx(0.5).margin(1e-12));
    REQUIRE(std::norm(reg.amp(3)) == Approx(0.5).margin(1e-12));
    REQUIRE(std::norm(reg.amp(1)) == Approx(0.0).margin(1e-12));
    REQUIRE(std::norm(reg.amp(2)) == Approx(0.0).margin(1e-12));

    SECTION("CNOT round-trips") {
        const Register before = reg;
        reg.apply(gates::cnot(), 1, 0);
        reg.apply(gates::cnot(), 1, 0);
        REQUIRE(fidelity(reg, before) == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("gate application preserves the norm", "[register]") {
    Register reg(4);
    Rng rng(99);
    for (int step = 0; step < 50; ++step) {
        const int q = static_cast<int>(rng.next_u64() % 4);
        switch (rng.next_u64() % 3) {
        case 0: reg.apply(gates::hadamard(), q); break;
        case 1: reg.apply(gates::pauli_x(), q); break;
        default: reg.apply(gates::cnot(), q, (q + 1) % 4); break;
        }
        REQUIRE(reg.norm_sq() == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("measurement", "[register]") {
    SECTION("measuring |1> is deterministic") {
        Register reg(1);
        reg.apply(gates::pauli_x(), 0);
        Rng rng(1);
        const auto result = reg.measure(0, rng);
        REQUIRE(result.outcome == 1);
        REQUIRE(result.probability == Approx(1.0).margin(1e-12));
    }

    SECTION("Bell pair halves always agree") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Register reg(2);
            reg.apply(gates::hadamard(), 0);
            reg.apply(gates::cnot(), 0, 1);
            Rng rng(seed);
            const auto first = reg.measure(0, rng);
            REQUIRE(first.probability == Approx(0.5).margin(1e-12));
            const auto second = reg.measure(1, rng);
            REQUIRE(second.outcome == first.outcome);
            REQUIRE(second.probability == Approx(1.0).margin(1e-12));
        }
    }

    SECTION("outcome frequency tracks the Born rule") {
        // sqrt(0.3)|0> + sqrt(0.7)|1>, 10^4 seeded trials; 3 sigma of a
        // Binomial(1e4, 0.7) is ~137.
        Rng rng(12345);
        int ones = 0;
        const int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            Register reg = Register::from_amplitudes(1, {std::sqrt(0.3), std::sqrt(0.7)});
            ones += reg.measure(0, rng).outcome;
        }
        const double sigma = std::sqrt(trials * 0.7 * 0.3);
        REQUIRE(std::abs(ones - trials * 0.7) <= 3.0 * sigma);
    }
}

TEST_CASE("fidelity", "[register]") {
    const std::vector<std::complex<double>> zero = {1.0, 0.0};
    const std::vector<std::complex<double>> one = {0.0, 1.0};
    const std::vector<std::complex<double>> plus = {kInvSqrt2, kInvSqrt2};

    REQUIRE(fidelity(std::span(zero), std::span(zero)) == Approx(1.0).margin(1e-12));
    REQUIRE(fidelity(std::span(zero), std::span(one)) == Approx(0.0).margin(1e-12));
    REQUIRE(fidelity(std::span(zero), std::span(plus)) == Approx(0.5).margin(1e-12));
    REQUIRE_THROWS_AS(fidelity(std::span(zero), std::span<const std::complex<double>>()),
                      std::invalid_argument);
}
