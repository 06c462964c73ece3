#include "sturmian/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sturmian/basis.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/stark_operator.hpp"

namespace sturmian {

SpectralResult bw_spectrum(const BasisTruncation& trunc, double beta, int k) {
  const auto matrix = assemble_matrix(trunc, beta);
  const auto dim = static_cast<Eigen::Index>(matrix.dimension());
  if (k > dim) throw DomainError("bw_spectrum: k exceeds the matrix dimension " + std::to_string(dim));
  const Eigen::Index count = k <= 0 ? dim : k;

  const Eigen::MatrixXd dense = matrix.to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("bw_spectrum: eigensolver did not converge (dimension " + std::to_string(dim) +
                           ", beta " + std::to_string(beta) + ")");

  SpectralResult out{trunc, beta, {}, Eigen::MatrixXd(dim, count), 0.0};
  out.eigenvalues.resize(static_cast<std::size_t>(count));
  const double norm = std::max(dense.cwiseAbs().rowwise().sum().maxCoeff(), 1.0);
  for (Eigen::Index j = 0; j < count; ++j) {
    Eigen::VectorXd v = solver.eigenvectors().col(j);
    Eigen::Index pivot = 0;
    if (std::abs(v[0]) <= 1e-10) {
      while (pivot < dim && std::abs(v[pivot]) <= 1e-10) ++pivot;
      if (pivot == dim) pivot = 0;
    }
    if (v[pivot] < 0.0) v = -v;
    const double lambda = solver.eigenvalues()[j];
    const double residual = (dense * v - lambda * v).norm() / norm;
    out.max_relative_residual = std::max(out.max_relative_residual, residual);
    out.eigenvalues[static_cast<std::size_t>(j)] = lambda;
    out.eigenvectors.col(j) = v;
  }
  if (out.max_relative_residual > 1e-12)
    throw ConvergenceError("bw_spectrum: eigenpair residual " + std::to_string(out.max_relative_residual) +
                           " exceeds 1e-12 relative");
  return out;
}

namespace {

// u(r) = r * R(r) with R(r) = y_nl(r/a) / sqrt(r a).
double reduced_radial(const QuantumIndex& nu, double a, double r) {
  return std::sqrt(r / a) * sturmian_radial(nu.n, nu.l, r / a);
}

// [(-nabla^2 - 2/r - E) R](r) by central differences on u.
double radial_lhs(const QuantumIndex& nu, const ScaleParameter& a, double r, double h) {
  const double u0 = reduced_radial(nu, a.a(), r);
  const double up = reduced_radial(nu, a.a(), r + h);
  const double um = reduced_radial(nu, a.a(), r - h);
  const double u2 = (up - 2.0 * u0 + um) / (h * h);
  const double l = nu.l;
  return (-u2 + l * (l + 1) * u0 / (r * r) - 2.0 * u0 / r - a.energy() * u0) / r;
}

double radial_rhs(const QuantumIndex& nu, const ScaleParameter& a, double r) {
  const double u0 = reduced_radial(nu, a.a(), r);
  return (nu.n - a.lambda()) * u0 / (a.a() * r * r);
}

std::pair<double, double> grid_residual(const QuantumIndex& nu, const ScaleParameter& a, const RadialGrid& grid,
                                        double step) {
  double residual = 0.0;
  double rhs_norm = 0.0;
  const auto points = static_cast<long>(std::floor((grid.r_max - grid.r_min) / step + 1e-9)) + 1;
  for (long i = 0; i < points; ++i) {
    const double r = grid.r_min + static_cast<double>(i) * step;
    const double rhs = radial_rhs(nu, a, r);
    residual = std::max(residual, std::abs(radial_lhs(nu, a, r, step) - rhs));
    rhs_norm = std::max(rhs_norm, std::abs(rhs));
  }
  return {residual, rhs_norm};
}

}  // namespace

RadialOperatorCheck apply_radial_operator_check(const QuantumIndex& nu, const ScaleParameter& a,
                                                const RadialGrid& grid) {
  require_valid(nu);
  if (!(grid.step > 0.0) || !(grid.r_min > grid.step) || !(grid.r_max > grid.r_min))
    throw DomainError("apply_radial_operator_check: need 0 < step < r_min < r_max");
  RadialOperatorCheck out;
  std::tie(out.residual, out.rhs_norm) = grid_residual(nu, a, grid, grid.step);
  out.residual_half_step = grid_residual(nu, a, grid, grid.step / 2).first;
  out.observed_order = out.residual_half_step > 0.0 ? std::log2(out.residual / out.residual_half_step) : 2.0;
  // Below ~1e-9 the differences are dominated by rounding (eps / h^2).
  out.too_coarse = out.residual > 1e-9 && out.observed_order < 1.5;
  return out;
}

double radial_operator_coefficient(const QuantumIndex& nu, const ScaleParameter& a, double r, double step) {
  require_valid(nu);
  const double u0 = reduced_radial(nu, a.a(), r);
  return radial_lhs(nu, a, r, step) / (u0 / (a.a() * r * r));
}

}  // namespace sturmian
