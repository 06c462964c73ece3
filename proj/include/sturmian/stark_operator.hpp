#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sturmian/quantum_index.hpp"
#include "sturmian/surd.hpp"

namespace sturmian {

// Dimensionless Stark perturbation V = -beta rho^2 cos(theta) between the
// basis functions, V_{nu nu'} = -beta delta_{mm'} J_{ll'} I^{ll'}_{nn'}.
// Only the m = 0 sector is implemented.

/// Angular factor int dOmega Y_l0 cos(theta) Y_l'0, exact.
Surd angular_J_exact(int l, int l_prime);
double angular_J(int l, int l_prime);

/// Radial factor int drho y_nl rho^2 y_n'l', exact. Nonzero only for
/// l' = l +- 1 and |n - n'| <= 2. Pairs naming a nonexistent state (l >= n)
/// give 0.
Surd radial_I_exact(int n, int l, int n_prime, int l_prime);
double radial_I(int n, int l, int n_prime, int l_prime);

/// Exact coupling c with V_{nu nu'} = beta * c. Zero whenever m != m'.
/// Throws UnsupportedFeature for m = m' != 0.
Surd stark_coupling_exact(const QuantumIndex& nu, const QuantumIndex& nu_prime);

double stark_element(const QuantumIndex& nu, const QuantumIndex& nu_prime, double beta);

/// States coupled to nu by the selection rules m' = m, l' = l +- 1,
/// |n' - n| <= 2, in lexicographic order. Only nonzero couplings appear.
std::vector<QuantumIndex> band_partners(const QuantumIndex& nu);

/// Symmetric matrix n delta + V over a truncation, stored by band.
class PerturbationMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;  // col > row
    double value;
  };

  PerturbationMatrix(BasisTruncation truncation, double beta, std::vector<Entry> upper);

  const BasisTruncation& truncation() const noexcept { return truncation_; }
  double beta() const noexcept { return beta_; }
  std::size_t dimension() const noexcept { return truncation_.size(); }
  double diagonal(std::size_t i) const { return static_cast<double>(truncation_[i].n); }
  /// Strictly-upper nonzero entries, sorted by (row, col).
  const std::vector<Entry>& upper_entries() const noexcept { return upper_; }

  double operator()(std::size_t i, std::size_t j) const;
  Eigen::MatrixXd to_dense() const;
  /// max |i - j| over stored entries.
  std::size_t bandwidth() const noexcept;

 private:
  BasisTruncation truncation_;
  double beta_;
  std::vector<Entry> upper_;
};

/// Assembles n delta + V(beta). m_sector must be 0.
PerturbationMatrix assemble_matrix(const BasisTruncation& trunc, double beta);

struct OracleElement {
  double value = 0.0;
  int radial_order = 0;
  int angular_order = 0;
  /// False if either rule is too short to integrate its polynomial exactly.
  bool sufficient = false;
};

/// The element -beta int (d^3rho / rho) phi*_nu rho^2 cos(theta) phi_nu' by
/// direct Gauss-Laguerre x Gauss-Legendre integration over the Sturmian
/// functions and spherical harmonics. Orders <= 0 select the exact order.
OracleElement quadrature_oracle_element(const QuantumIndex& nu, const QuantumIndex& nu_prime, double beta,
                                        int radial_order = 0, int angular_order = 0);

/// Similarity transform with d_nu = sqrt((2l+1) (n+l)!/(n-l-1)!) under
/// which the matrix becomes M~_{nu nu'} = M_{nu nu'} d_nu' / d_nu with
/// rational entries. Not symmetric.
class ScaledStarkMatrix {
 public:
  struct Coupling {
    std::size_t col;
    Rational value;  // M~_{row col} = beta * value (off-diagonal)
  };

  explicit ScaledStarkMatrix(BasisTruncation truncation);

  const BasisTruncation& truncation() const noexcept { return truncation_; }
  const std::vector<Surd>& scale() const noexcept { return scale_; }
  std::size_t dimension() const noexcept { return truncation_.size(); }
  /// Unperturbed diagonal n of row i.
  long diagonal(std::size_t i) const { return truncation_[i].n; }
  const std::vector<Coupling>& row(std::size_t i) const { return rows_[i]; }

  /// M~ evaluated at a floating beta.
  Eigen::MatrixXd to_dense(double beta) const;

 private:
  BasisTruncation truncation_;
  std::vector<Surd> scale_;
  std::vector<std::vector<Coupling>> rows_;
};

/// d_nu as exact surds, indexed like the truncation.
std::vector<Surd> similarity_scale(const BasisTruncation& trunc);
Surd similarity_factor(const QuantumIndex& nu);

/// Rational coupling c~ with M~_{nu nu'} = beta c~ (throws ConsistencyError
/// if the rescaled value is irrational).
Rational scaled_stark_coupling(const QuantumIndex& nu, const QuantumIndex& nu_prime);

/// Builds the exact rescaled matrix; throws ConsistencyError if any entry is
/// not rational.
ScaledStarkMatrix rational_similarity_scale(const BasisTruncation& trunc);

}  // namespace sturmian
