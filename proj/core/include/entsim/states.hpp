#pragma once

#include <Eigen/Dense>

#include <vector>

namespace entsim {

// Inputs farther than this from unit norm are rejected; anything closer is
// rescaled to exact unit norm on construction.
inline constexpr double kNormTolerance = 1e-6;

// Singular values at or below this count as zero when computing Schmidt rank.
inline constexpr double kSchmidtCutoff = 1e-12;

// Shannon entropy of {p, 1-p} in bits, with the 0*log2(0) == 0 convention.
double binary_entropy(double p);

// dim_a x dim_b complex amplitudes c_ij of |psi> = sum_ij c_ij |i>_A |j>_B.
// Stored with unit Frobenius norm.
class AmplitudeMatrix {
  public:
    explicit AmplitudeMatrix(Eigen::MatrixXcd entries);

    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index dim_a() const { return entries_.rows(); }
    Eigen::Index dim_b() const { return entries_.cols(); }

  private:
    Eigen::MatrixXcd entries_;
};

// Schmidt coefficients of a bipartite pure state: real, non-negative, sorted
// non-increasing, squares summing to 1. Basis phases live in the local bases
// returned by schmidt_decompose, never here.
class BipartitePureState {
  public:
    BipartitePureState(std::vector<double> coeffs, int dim_a, int dim_b);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int schmidt_rank() const;

  private:
    std::vector<double> coeffs_;
    int dim_a_;
    int dim_b_;
};

struct SchmidtDecomposition {
    BipartitePureState state;
    Eigen::MatrixXcd left_basis;  // columns |u_k>
    Eigen::MatrixXcd right_basis; // columns |v_k>

    // sum_k coeff_k |u_k><v_k|^T, for checking against the input matrix.
    Eigen::MatrixXcd reconstruct() const;
};

SchmidtDecomposition schmidt_decompose(const AmplitudeMatrix& m);

enum class Side { A, B };

// d x d density operator. Construction validates hermiticity and unit trace,
// then stores the hermitized, trace-normalized matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index dim() const { return entries_.rows(); }

    // Ascending eigenvalues clamped to [0, 1]. Negative values beyond -1e-12
    // are an error; anything in (-1e-12, 0) is numerical noise and clips to 0.
    std::vector<double> eigenvalues() const;

  private:
    Eigen::MatrixXcd entries_;
};

DensityMatrix reduced_density(const AmplitudeMatrix& m, Side side);

// -tr(rho log2 rho) in ebits; lies in [0, log2 dim].
double von_neumann_entropy(const DensityMatrix& rho);

// -sum_k c_k^2 log2 c_k^2, the entropy of either party's reduced state.
double entropy_of_entanglement(const BipartitePureState& s);

BipartitePureState make_bell();
BipartitePureState make_partial(double a);

// n parties sharing a|00...0> + b|11...1> with b = sqrt(1 - a^2).
class MultipartyState {
  public:
    MultipartyState(double a, int n_parties);

    double a() const { return a_; }
    double b() const { return b_; }
    int n_parties() const { return n_parties_; }

  private:
    double a_;
    double b_;
    int n_parties_;
};

MultipartyState make_multiparty(double a, int n_parties);
MultipartyState make_cat(int n_parties);

// Entropy across the cut given by a non-empty proper subset of parties.
// Every cut of the two-term Schmidt form gives the same value.
double bipartition_entropy(const MultipartyState& s, const std::vector<int>& cut);

// The two-coefficient bipartite state seen across any single cut.
BipartitePureState to_bipartite(const MultipartyState& s);

} // namespace entsim
