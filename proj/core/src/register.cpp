#include "entsim/register.hpp"

#include <cmath>
#include <stdexcept>

#include "entsim/states.hpp"

namespace entsim {

namespace {

void check_target(int n_qubits, int target) {
    if (target < 0 || target >= n_qubits) {
        throw std::out_of_range("Register: qubit index out of range");
    }
}

template <typename Matrix>
void check_unitary(const Matrix& gate) {
    const Matrix residual = gate.adjoint() * gate - Matrix::Identity();
    if (residual.cwiseAbs().maxCoeff() > kUnitaryTolerance) {
        throw std::invalid_argument("Register: gate is not unitary");
    }
}

} // namespace

Register::Register(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw std::invalid_argument("Register: qubit count outside [1, 24]");
    }
    amps_.assign(std::size_t{1} << n_qubits_, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

Register Register::from_amplitudes(int n_qubits, std::vector<std::complex<double>> amps) {
    Register reg(n_qubits);
    if (amps.size() != reg.dim()) {
        throw std::invalid_argument("Register: amplitude vector has wrong length");
    }
    double norm_sq = 0.0;
    for (const auto& a : amps) norm_sq += std::norm(a);
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("Register: amplitudes are not normalized");
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& a : amps) a /= norm;
    reg.amps_ = std::move(amps);
    return reg;
}

double Register::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

void Register::apply(const Eigen::Matrix2cd& gate, int target) {
    check_target(n_qubits_, target);
    check_unitary(gate);

    const std::size_t step = std::size_t{1} << target;
    const std::size_t block = step << 1;
    for (std::size_t base = 0; base < amps_.size(); base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const auto a0 = amps_[i0];
            const auto a1 = amps_[i1];
            amps_[i0] = gate(0, 0) * a0 + gate(0, 1) * a1;
            amps_[i1] = gate(1, 0) * a0 + gate(1, 1) * a1;
        }
    }
}

void Register::apply(const Eigen::Matrix4cd& gate, int high, int low) {
    check_target(n_qubits_, high);
    check_target(n_qubits_, low);
    if (high == low) {
        throw std::invalid_argument("Register: two-qubit gate targets must be distinct");
    }
    check_unitary(gate);

    const std::size_t mask_high = std::size_t{1} << high;
    const std::size_t mask_low = std::size_t{1} << low;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask_high) != 0 || (i & mask_low) != 0) continue;
        // i has both target bits clear; visit the 4 basis states it anchors.
        const std::size_t idx[4] = {i, i | mask_low, i | mask_high, i | mask_high | mask_low};
        Eigen::Vector4cd v;
        for (int r = 0; r < 4; ++r) v(r) = amps_[idx[r]];
        const Eigen::Vector4cd w = gate * v;
        for (int r = 0; r < 4; ++r) amps_[idx[r]] = w(r);
    }
}

MeasurementResult Register::measure(int target, Rng& rng) {
    check_target(n_qubits_, target);

    const std::size_t mask = std::size_t{1} << target;
    double mass_one = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) mass_one += std::norm(amps_[i]);
    }

    const int outcome = rng.uniform() < mass_one ? 1 : 0;
    const double probability = outcome == 1 ? mass_one : 1.0 - mass_one;
    const double scale = 1.0 / std::sqrt(probability);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const bool bit = (i & mask) != 0;
        if (bit != static_cast<bool>(outcome)) {
            amps_[i] = {0.0, 0.0};
        } else {
            amps_[i] *= scale;
        }
    }
    return {outcome, probability};
}

double fidelity(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    std::complex<double> inner{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
    return std::norm(inner);
}

double fidelity(const Register& a, const Register& b) {
    return fidelity(a.amplitudes(), b.amplitudes());
}

namespace gates {

Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << s, s, s, -s;
    return m;
}

Eigen::Matrix4cd cnot() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

} // namespace gates

} // namespace entsim
