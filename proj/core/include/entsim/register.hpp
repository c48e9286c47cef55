#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "entsim/rng.hpp"

namespace entsim {

inline constexpr int kMaxQubits = 24;
inline constexpr double kUnitaryTolerance = 1e-10;

struct MeasurementResult {
    int outcome;        // 0 or 1
    double probability; // pre-measurement mass of that outcome
};

// Dense amplitude vector of a small multi-qubit system. Qubit 0 is the least
// significant bit of the basis index.
class Register {
  public:
    explicit Register(int n_qubits); // |00...0>

    static Register from_amplitudes(int n_qubits, std::vector<std::complex<double>> amps);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::complex<double> amp(std::size_t basis) const { return amps_[basis]; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    // Single-qubit gate on `target`; the gate must be unitary within 1e-10.
    void apply(const Eigen::Matrix2cd& gate, int target);

    // Two-qubit gate on (high, low): the gate's 2-bit basis index is
    // bit(high) << 1 | bit(low). For gates::cnot() the control is `high`.
    void apply(const Eigen::Matrix4cd& gate, int high, int low);

    // Born-rule measurement of one qubit; collapses and renormalizes in place.
    MeasurementResult measure(int target, Rng& rng);

    double norm_sq() const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

inline MeasurementResult measure_qubit(Register& reg, int target, Rng& rng) {
    return reg.measure(target, rng);
}

// Squared inner product |<a|b>|^2 of two normalized pure states.
double fidelity(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);
double fidelity(const Register& a, const Register& b);

namespace gates {

Eigen::Matrix2cd identity();
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();
Eigen::Matrix4cd cnot();

} // namespace gates

} // namespace entsim
