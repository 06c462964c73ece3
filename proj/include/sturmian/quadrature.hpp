#pragma once

#include <vector>

namespace sturmian {

/// Gauss-Laguerre rule for int_0^inf e^{-x} f(x) dx, exact for polynomial f
/// of degree <= 2N-1.
///
/// Besides the ordinary weights the rule keeps w_i e^{x_i}, which is what
/// you want when the integrand is evaluated with its exponential intact
/// (e.g. products of Sturmian functions): the ordinary weights underflow
/// long before those products do.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;  // weights[i] * exp(nodes[i])

  std::size_t order() const noexcept { return nodes.size(); }
  /// Highest polynomial degree integrated exactly.
  int exact_degree() const noexcept { return 2 * static_cast<int>(nodes.size()) - 1; }
};

/// Nodes from the Golub-Welsch eigenproblem, refined by Newton on the
/// Laguerre recurrence; weights from w_i = x_i / ((N+1) L_{N+1}(x_i))^2.
/// Supported orders: 1..400.
GaussLaguerreRule gauss_laguerre(int order);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t order() const noexcept { return nodes.size(); }
  int exact_degree() const noexcept { return 2 * static_cast<int>(nodes.size()) - 1; }
};

GaussLegendreRule gauss_legendre(int order);

/// Smallest Gauss rule order that integrates a polynomial of the given degree
/// exactly: degree/2 + 1.
int required_gauss_order(int polynomial_degree) noexcept;

}  // namespace sturmian
