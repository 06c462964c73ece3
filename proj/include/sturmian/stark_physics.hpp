#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturmian/rspt.hpp"

namespace sturmian {

// Field strengths F are dimensionless, F = field / (e / a_B^2), the atomic
// field unit. Energies in Ry.

/// E/Ry = -1/lambda^2. Throws DomainError for lambda <= 0.
double lambda_to_energy(double lambda);

/// beta = lambda^3 F / 4.
double beta_of(double lambda, double field);
Rational beta_of(const Rational& lambda, const Rational& field);

// Truncated exact power series arithmetic (coefficients 0..order).
namespace series {

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, int order);
/// 1/a; requires a[0] != 0.
std::vector<Rational> reciprocal(const std::vector<Rational>& a, int order);
/// p(x(t)) for a polynomial p and a series x(t) with x(0) = 0.
std::vector<Rational> compose(const std::vector<Rational>& p, const std::vector<Rational>& x, int order);

}  // namespace series

/// lambda(F) solving lambda = P(lambda^3 F / 4) order by order, P the given
/// lambda(beta) series. Requires lambda_series.max_order() >= max_order.
RationalSeries lambda_series_in_field(const RationalSeries& lambda_series, int max_order);

/// E(F)/Ry = -1/lambda(F)^2 truncated at max_order (even, >= 2, or 0).
RationalSeries energy_series_in_field(const RationalSeries& lambda_series, int max_order);
/// Convenience overload computing lambda(beta) first.
RationalSeries energy_series_in_field(int max_order);

enum class CurveMethod { Implicit, PowerSeries };

std::string to_string(CurveMethod m);

struct CurvePoint {
  double field = 0.0;
  int order = 0;
  CurveMethod method = CurveMethod::Implicit;
  double lambda = 0.0;
  double energy = 0.0;
  bool converged = false;
  int iterations = 0;
  std::string diagnostic;
};

/// Root of lambda = P_s(lambda^3 F / 4) continuously connected to lambda = 1:
/// Newton from the warm start (default 1), safeguarded by bisection on the
/// bracket [0.5, 1.5] (or [0.5, warm start] when that fails to bracket).
/// Tolerance 1e-12 on |lambda - P_s(...)|, at most 100 iterations.
/// Non-convergence is reported in the point, not thrown.
CurvePoint solve_implicit(const RationalSeries& lambda_series, double field, int order,
                          std::optional<double> warm_start = std::nullopt);

/// Same, computing lambda(beta) to the requested order first.
CurvePoint solve_implicit(double field, int order);

/// Rows for the Stark curve table: for each implicit order, one implicit
/// point per field value (warm-started along the grid); for each series
/// order, the truncated E(F) power series. Grid must be ascending and
/// non-negative.
std::vector<CurvePoint> curve(const std::vector<double>& field_grid, const std::vector<int>& implicit_orders,
                              const std::vector<int>& series_orders);

}  // namespace sturmian
