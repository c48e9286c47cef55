#include "entsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entsim {

namespace {

constexpr double kEigenNoiseFloor = -1e-12;

void check_unit_norm_sq(double norm_sq, const char* what) {
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument(std::string(what) + " is not normalized");
    }
}

} // namespace

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("binary_entropy: p outside [0, 1]");
    }
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

AmplitudeMatrix::AmplitudeMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.cols() < 1) {
        throw std::invalid_argument("AmplitudeMatrix: empty matrix");
    }
    const double norm = entries_.norm();
    check_unit_norm_sq(norm * norm, "AmplitudeMatrix");
    entries_ /= norm;
}

BipartitePureState::BipartitePureState(std::vector<double> coeffs, int dim_a, int dim_b)
    : coeffs_(std::move(coeffs)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a_ < 1 || dim_b_ < 1) {
        throw std::invalid_argument("BipartitePureState: local dimensions must be positive");
    }
    if (coeffs_.empty() ||
        coeffs_.size() > static_cast<std::size_t>(std::min(dim_a_, dim_b_))) {
        throw std::invalid_argument("BipartitePureState: coefficient count exceeds min(dim_a, dim_b)");
    }
    double sum_sq = 0.0;
    for (double c : coeffs_) {
        if (c < 0.0) throw std::invalid_argument("BipartitePureState: negative Schmidt coefficient");
        sum_sq += c * c;
    }
    check_unit_norm_sq(sum_sq, "BipartitePureState");
    std::sort(coeffs_.begin(), coeffs_.end(), std::greater<>());
    const double norm = std::sqrt(sum_sq);
    for (double& c : coeffs_) c /= norm;
}

int BipartitePureState::schmidt_rank() const {
    int rank = 0;
    for (double c : coeffs_) {
        if (c > kSchmidtCutoff) ++rank;
    }
    return rank;
}

Eigen::MatrixXcd SchmidtDecomposition::reconstruct() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(left_basis.rows(), right_basis.rows());
    const auto& coeffs = state.coeffs();
    for (Eigen::Index k = 0; k < left_basis.cols(); ++k) {
        m += coeffs[static_cast<std::size_t>(k)] * left_basis.col(k) * right_basis.col(k).transpose();
    }
    return m;
}

SchmidtDecomposition schmidt_decompose(const AmplitudeMatrix& m) {
    // m = U S V^dagger, so |psi> = sum_k s_k |u_k>|conj(v_k)>; the conjugation
    // moves into the stored right basis, keeping the coefficients real.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries(),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    std::vector<double> coeffs(sv.data(), sv.data() + sv.size());
    BipartitePureState state(std::move(coeffs), static_cast<int>(m.dim_a()),
                             static_cast<int>(m.dim_b()));
    return SchmidtDecomposition{std::move(state), svd.matrixU(), svd.matrixV().conjugate()};
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    }
    const double herm_dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-9) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    const double trace = entries_.trace().real();
    if (std::abs(trace - 1.0) > 1e-9) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    entries_ = (entries_ + entries_.adjoint()) / (2.0 * trace);
}

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                           Eigen::EigenvaluesOnly);
    std::vector<double> eig(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double& v : eig) {
        if (v < kEigenNoiseFloor) {
            throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond noise floor");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    return eig;
}

DensityMatrix reduced_density(const AmplitudeMatrix& m, Side side) {
    if (side == Side::A) {
        return DensityMatrix(m.entries() * m.entries().adjoint());
    }
    return DensityMatrix(m.entries().transpose() * m.entries().conjugate());
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double entropy = 0.0;
    for (double mu : rho.eigenvalues()) {
        if (mu > 0.0) entropy -= mu * std::log2(mu);
    }
    return std::clamp(entropy, 0.0, std::log2(static_cast<double>(rho.dim())));
}

double entropy_of_entanglement(const BipartitePureState& s) {
    double entropy = 0.0;
    for (double c : s.coeffs()) {
        const double p = c * c;
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    return std::max(entropy, 0.0);
}

BipartitePureState make_bell() { return make_partial(std::sqrt(0.5)); }

BipartitePureState make_partial(double a) {
    if (a < 0.0 || a > 1.0) {
        throw std::invalid_argument("make_partial: amplitude outside [0, 1]");
    }
    const double b = std::sqrt(1.0 - a * a);
    return BipartitePureState({a, b}, 2, 2);
}

MultipartyState::MultipartyState(double a, int n_parties) : a_(a), n_parties_(n_parties) {
    if (a_ < 0.0 || a_ > 1.0) {
        throw std::invalid_argument("MultipartyState: amplitude outside [0, 1]");
    }
    if (n_parties_ < 2) {
        throw std::invalid_argument("MultipartyState: need at least 2 parties");
    }
    b_ = std::sqrt(1.0 - a_ * a_);
}

MultipartyState make_multiparty(double a, int n_parties) { return MultipartyState(a, n_parties); }

MultipartyState make_cat(int n_parties) { return MultipartyState(std::sqrt(0.5), n_parties); }

double bipartition_entropy(const MultipartyState& s, const std::vector<int>& cut) {
    if (cut.empty() || cut.size() >= static_cast<std::size_t>(s.n_parties())) {
        throw std::invalid_argument("bipartition_entropy: cut must be a non-empty proper subset");
    }
    std::vector<bool> seen(static_cast<std::size_t>(s.n_parties()), false);
    for (int p : cut) {
        if (p < 0 || p >= s.n_parties()) {
            throw std::invalid_argument("bipartition_entropy: party index out of range");
        }
        if (seen[static_cast<std::size_t>(p)]) {
            throw std::invalid_argument("bipartition_entropy: duplicate party in cut");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    // a|0...0> + b|1...1> has the same two Schmidt coefficients across every cut.
    return binary_entropy(s.a() * s.a());
}

BipartitePureState to_bipartite(const MultipartyState& s) {
    return BipartitePureState({s.a(), s.b()}, 2, 2);
}

} // namespace entsim
