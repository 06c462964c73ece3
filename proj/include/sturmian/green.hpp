#pragma once

#include <vector>

#include "sturmian/quantum_index.hpp"

namespace sturmian {

// Discrete Coulomb Green's function at E < 0 (Ry, a_B units):
//   G_E(r, r') = a sum_{nlm} chi*_nlm(r'; a) chi_nlm(r; a) / (n - lambda),
// with a = a(E), lambda = 1/sqrt(-E). It inverts (-nabla^2 - 2/r - E).

struct GreenEvaluation {
  double energy = 0.0;
  Vec3 r{};
  Vec3 r_prime{};
  int n_max = 0;
  double value = 0.0;
  /// partial_sums[k] = sum over n <= k+1.
  std::vector<double> partial_sums;
};

/// Throws DomainError for E >= 0 or n_max < 1, PoleError when lambda(E) is
/// within pole_tolerance of an integer n <= n_max. The m sum is carried out by
/// the addition theorem.
GreenEvaluation green_function(double energy_ry, const Vec3& r, const Vec3& r_prime, int n_max,
                               double pole_tolerance = 1e-9);

/// Same partial sum over explicit (n, l, m) with complex spherical harmonics.
/// Slow; used to check the addition-theorem path.
double green_function_direct(double energy_ry, const Vec3& r, const Vec3& r_prime, int n_max,
                             double pole_tolerance = 1e-9);

/// Throws PoleError if lambda is within tolerance of an integer in [1, n_max].
void check_pole(double lambda, int n_max, double tolerance);

struct ResolventCheck {
  QuantumIndex nu;
  /// max over sample points |int G(r, r') (H' - E) chi_nu(r') d^3r' - chi_nu(r)|
  double max_residual = 0.0;
  /// max |chi_nu(r)| over the same points, for scale.
  double max_value = 0.0;
};

/// Quadrature check of the resolvent identity
///   int G_E(r, r') [(-nabla'^2 - 2/r' - E) chi_nu(r'; a)] d^3r' = chi_nu(r; a),
/// with the operator applied analytically as (n - lambda) chi / (a r').
/// Radial: Gauss-Laguerre in r'/a. Angular: Gauss-Legendre in cos(theta') x
/// uniform grid in phi'. m_nu must be 0.
ResolventCheck resolvent_residual(double energy_ry, const QuantumIndex& nu, const std::vector<Vec3>& points,
                                  int n_max);

}  // namespace sturmian
