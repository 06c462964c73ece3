#pragma once

#include <complex>
#include <vector>

#include "sturmian/quantum_index.hpp"

namespace sturmian {

/// sqrt((n-l-1)!/(n+l)!), exact integer product for n+l <= 40, log-sum above.
double sturmian_norm(int n, int l);

/// Sturmian radial function
///   y_nl(rho) = sqrt((n-l-1)!/(n+l)!) rho^{l+1/2} e^{-rho/2} L_{n-l-1}^{2l+1}(rho),
/// orthonormal with unit weight on [0, inf).
double sturmian_radial(int n, int l, double rho);

/// y_nl(rho) / sqrt(rho); finite at rho = 0 (nonzero only for l = 0).
double sturmian_radial_reduced(int n, int l, double rho);

/// chi_nu(r; a) = y_nl(r/a) Y_lm(theta, phi) / sqrt(r a), orthonormal with
/// weight 1/r. At the origin only l = 0 survives, with the finite limit
/// y_n0(rho)/sqrt(rho) -> sqrt(n) (as a function of rho) times Y_00 / a.
std::complex<double> basis_function(const QuantumIndex& nu, const Vec3& r, const ScaleParameter& a);

/// Normalized bound-state hydrogen wavefunction psi_nlm(r) in a_B^{-3/2}.
///
/// Relation to the basis: chi_nu(r; a) = (n^2 / (2a)) psi_nu((n/(2a)) r).
std::complex<double> coulomb_wavefunction(const QuantumIndex& nu, const Vec3& r);

/// Prefactor c with chi_nu(r; a) = c * psi_nu((n/(2a)) r).
double coulomb_scaling_prefactor(int n, const ScaleParameter& a);

/// |int (d^3r / r) chi*_nu chi_nu' - delta_{nu nu'}| over a truncation.
struct OrthonormalityReport {
  BasisTruncation truncation;
  int quad_order = 0;
  int required_order = 0;
  /// False when quad_order < required_order; the residuals are then not
  /// guaranteed to reflect the basis, only the rule.
  bool sufficient = false;
  std::vector<std::vector<double>> residual;  // indexed like truncation
  double max_residual = 0.0;
};

/// Radial integrals by Gauss-Laguerre; pairs with different l are exactly
/// zero by spherical-harmonic orthogonality and never reach the quadrature.
OrthonormalityReport orthonormality_residual(const BasisTruncation& trunc, int quad_order);

/// Gauss-Laguerre order that integrates every y_nl y_n'l product in the
/// truncation exactly (polynomial degree n + n' - 1).
int orthonormality_required_order(const BasisTruncation& trunc) noexcept;

}  // namespace sturmian
