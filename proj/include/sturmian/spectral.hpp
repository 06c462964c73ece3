#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sturmian/quantum_index.hpp"

namespace sturmian {

/// Lowest eigenpairs of the truncated problem sum_nu' [n delta + V] C = lambda C.
struct SpectralResult {
  BasisTruncation truncation;
  double beta = 0.0;
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // column k belongs to eigenvalues[k], unit norm
  double max_relative_residual = 0.0;
};

/// Diagonalizes the Stark matrix at fixed beta. Eigenvector signs are fixed
/// by making the (1,0,0) component nonnegative, or the first component with
/// magnitude above 1e-10 when that one vanishes. k <= 0 returns all pairs.
/// Throws ConvergenceError if the eigensolver fails or the residual exceeds
/// 1e-12 relative.
SpectralResult bw_spectrum(const BasisTruncation& trunc, double beta, int k = 0);

/// Uniform radial grid r_min, r_min + step, ..., <= r_max.
struct RadialGrid {
  double r_min = 0.5;
  double r_max = 10.0;
  double step = 1e-3;
};

struct RadialOperatorCheck {
  /// max_r |(-nabla^2 - 2/r - E) chi - (n - lambda) chi / (a r)| (radial
  /// part, second-order central differences).
  double residual = 0.0;
  /// max_r |(n - lambda) chi / (a r)|, the analytic right-hand side.
  double rhs_norm = 0.0;
  /// Same residual at step/2.
  double residual_half_step = 0.0;
  /// log2(residual / residual_half_step); ~2 in the asymptotic regime.
  double observed_order = 0.0;
  /// True when the observed order is below 1.5 while the residual is above
  /// rounding level: the grid is too coarse to trust.
  bool too_coarse = false;
};

/// Verifies (-nabla^2 - 2/r - E) chi_nu = (n - lambda) chi_nu / (a r) in Ry,
/// a_B units, where E = -1/lambda^2 and lambda = 2a.
RadialOperatorCheck apply_radial_operator_check(const QuantumIndex& nu, const ScaleParameter& a,
                                                const RadialGrid& grid);

/// Pointwise ratio of the finite-difference left side to chi/(a r), i.e.
/// the coefficient (n - lambda), sampled at r.
double radial_operator_coefficient(const QuantumIndex& nu, const ScaleParameter& a, double r, double step);

}  // namespace sturmian
