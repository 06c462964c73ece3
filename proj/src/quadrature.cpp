#include "sturmian/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

// L_N(x) and L_{N-1}(x), alpha = 0.
std::pair<double, double> laguerre_pair(int order, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < order; ++k) {
    const double next = ((2 * k + 1 - x) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

int required_gauss_order(int polynomial_degree) noexcept {
  return polynomial_degree < 0 ? 1 : polynomial_degree / 2 + 1;
}

GaussLaguerreRule gauss_laguerre(int order) {
  if (order < 1 || order > 400) throw DomainError("gauss_laguerre: order must be in [1, 400]");
  const auto n = static_cast<Eigen::Index>(order);

  // Jacobi matrix of the monic Laguerre recurrence.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (Eigen::Index k = 0; k < n; ++k) diag[k] = 2.0 * static_cast<double>(k) + 1.0;
  for (Eigen::Index k = 1; k < n; ++k) sub[k - 1] = static_cast<double>(k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("gauss_laguerre: Jacobi eigensolve failed");

  GaussLaguerreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.scaled_weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const auto [ln, lnm1] = laguerre_pair(order, x);
      const double deriv = order * (ln - lnm1) / x;
      const double dx = ln / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * x) break;
    }
    // L_{N+1}(x) from one more recurrence step.
    const auto [ln, lnm1] = laguerre_pair(order, x);
    const double lnp1 = ((2 * order + 1 - x) * ln - order * lnm1) / (order + 1);
    const double log_w = std::log(x) - 2.0 * std::log((order + 1) * std::abs(lnp1));
    if (!std::isfinite(log_w)) throw ConsistencyError("gauss_laguerre: non-finite weight");
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_w);
    rule.scaled_weights[i] = std::exp(log_w + x);
  }
  return rule;
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 1; k < order; ++k) {
        const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      const double pn = order == 0 ? 1.0 : p1;
      const double pnm1 = p0;
      deriv = order * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the polished node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 1; k < order; ++k) {
      const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
      p0 = p1;
      p1 = p2;
    }
    deriv = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace sturmian
