#include "sturmian/stark_physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sturmian/errors.hpp"

namespace sturmian {

double lambda_to_energy(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda_to_energy: lambda must be positive");
  return -1.0 / (lambda * lambda);
}

double beta_of(double lambda, double field) { return lambda * lambda * lambda * field / 4.0; }

Rational beta_of(const Rational& lambda, const Rational& field) {
  return Rational(lambda * lambda * lambda * field / 4);
}

namespace series {

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<Rational> reciprocal(const std::vector<Rational>& a, int order) {
  if (a.empty() || sgn(a[0]) == 0) throw DomainError("series::reciprocal: constant term must be nonzero");
  std::vector<Rational> inv(static_cast<std::size_t>(order) + 1, Rational(0));
  inv[0] = 1 / a[0];
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j)
      acc += a[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  return inv;
}

std::vector<Rational> compose(const std::vector<Rational>& p, const std::vector<Rational>& x, int order) {
  if (!x.empty() && sgn(x[0]) != 0) throw DomainError("series::compose: inner series must vanish at 0");
  // Horner in series arithmetic.
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = multiply(acc, x, order);
    acc[0] += *it;
  }
  return acc;
}

}  // namespace series

RationalSeries lambda_series_in_field(const RationalSeries& lambda_series, int max_order) {
  if (lambda_series.variable() != SeriesVariable::Beta)
    throw DomainError("lambda_series_in_field: expected a series in beta");
  if (max_order < 0) throw DomainError("lambda_series_in_field: order must be >= 0");
  if (lambda_series.max_order() < max_order)
    throw DomainError("lambda_series_in_field: lambda(beta) known to order " +
                      std::to_string(lambda_series.max_order()) + ", need " + std::to_string(max_order));
  const auto truncated = lambda_series.truncated(max_order);
  const auto& p = truncated.coefficients();

  // Fixed point lambda <- P(lambda^3 F/4); beta = O(F), so each pass fixes one
  // more order.
  std::vector<Rational> lambda(static_cast<std::size_t>(max_order) + 1, Rational(0));
  lambda[0] = p[0];
  const std::vector<Rational> quarter_field{Rational(0), Rational(1, 4)};
  for (int pass = 0; pass < max_order; ++pass) {
    const auto cube = series::multiply(series::multiply(lambda, lambda, max_order), lambda, max_order);
    const auto beta = series::multiply(cube, quarter_field, max_order);
    lambda = series::compose(p, beta, max_order);
  }
  return RationalSeries(SeriesVariable::Field, std::move(lambda));
}

RationalSeries energy_series_in_field(const RationalSeries& lambda_series, int max_order) {
  if (max_order < 0 || max_order % 2 != 0) throw DomainError("energy_series_in_field: order must be even and >= 0");
  const auto lambda = lambda_series_in_field(lambda_series, max_order);
  const auto& c = lambda.coefficients();
  auto energy = series::reciprocal(series::multiply(c, c, max_order), max_order);
  for (auto& e : energy) e = -e;
  return RationalSeries(SeriesVariable::Field, std::move(energy));
}

RationalSeries energy_series_in_field(int max_order) {
  if (max_order < 0 || max_order % 2 != 0) throw DomainError("energy_series_in_field: order must be even and >= 0");
  return energy_series_in_field(rspt_ground_state(std::max(max_order, 1)), max_order);
}

std::string to_string(CurveMethod m) { return m == CurveMethod::Implicit ? "implicit" : "power_series"; }

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 100;

struct ImplicitEquation {
  const RationalSeries& p;
  double field;

  double residual(double lambda) const { return lambda - evaluate_series(p, beta_of(lambda, field)); }
  double derivative(double lambda) const {
    return 1.0 - evaluate_series_derivative(p, beta_of(lambda, field)) * 3.0 * lambda * lambda * field / 4.0;
  }
};

}  // namespace

CurvePoint solve_implicit(const RationalSeries& lambda_series, double field, int order,
                          std::optional<double> warm_start) {
  if (!(field >= 0.0)) throw DomainError("solve_implicit: field must be >= 0");
  if (order < 0 || order % 2 != 0) throw DomainError("solve_implicit: order must be even and >= 0");
  if (lambda_series.max_order() < order)
    throw DomainError("solve_implicit: lambda(beta) known to order " + std::to_string(lambda_series.max_order()));
  const auto p = lambda_series.truncated(order);
  const ImplicitEquation eq{p, field};

  CurvePoint point{field, order, CurveMethod::Implicit, 0.0, 0.0, false, 0, {}};
  double lo = 0.5;
  double hi = 1.5;
  double g_lo = eq.residual(lo);
  double g_hi = eq.residual(hi);
  const double start = warm_start.value_or(1.0);
  bool bracketed = (g_lo < 0.0) != (g_hi < 0.0);
  if (!bracketed && start > lo && start < hi) {
    hi = start;
    g_hi = eq.residual(hi);
    bracketed = (g_lo < 0.0) != (g_hi < 0.0);
  }

  double x = std::clamp(start, lo, hi);
  for (int it = 0; it <= kMaxIterations; ++it) {
    const double g = eq.residual(x);
    if (std::abs(g) < kTolerance) {
      point.lambda = x;
      point.energy = lambda_to_energy(x);
      point.converged = true;
      point.iterations = it;
      return point;
    }
    if (it == kMaxIterations) break;
    if (bracketed) {
      if ((g < 0.0) == (g_lo < 0.0)) {
        lo = x;
        g_lo = g;
      } else {
        hi = x;
        g_hi = g;
      }
    }
    const double dg = eq.derivative(x);
    double next = dg != 0.0 ? x - g / dg : std::numeric_limits<double>::quiet_NaN();
    if (bracketed && !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (!std::isfinite(next) || next <= 0.0) {
      point.diagnostic = "Newton step left the physical region (lambda <= 0) without a bracket";
      point.iterations = it + 1;
      point.lambda = x;
      return point;
    }
    if (bracketed && hi - lo < 1e-15 * hi) {
      x = next;
      const double g_final = eq.residual(x);
      point.diagnostic = "bracket collapsed with residual " + std::to_string(g_final);
      point.iterations = it + 1;
      point.lambda = x;
      return point;
    }
    x = next;
  }
  point.iterations = kMaxIterations;
  point.lambda = x;
  point.diagnostic = "no convergence in " + std::to_string(kMaxIterations) + " iterations";
  return point;
}

CurvePoint solve_implicit(double field, int order) {
  return solve_implicit(rspt_ground_state(std::max(order, 1)), field, order);
}

std::vector<CurvePoint> curve(const std::vector<double>& field_grid, const std::vector<int>& implicit_orders,
                              const std::vector<int>& series_orders) {
  if (!std::is_sorted(field_grid.begin(), field_grid.end())) throw DomainError("curve: field grid must be ascending");
  if (!field_grid.empty() && field_grid.front() < 0.0) throw DomainError("curve: field must be >= 0");
  for (int s : implicit_orders)
    if (s < 0 || s % 2 != 0) throw DomainError("curve: implicit orders must be even and >= 0");
  for (int s : series_orders)
    if (s < 0 || s % 2 != 0) throw DomainError("curve: power-series orders must be even and >= 0");

  int top = 1;
  for (int s : implicit_orders) top = std::max(top, s);
  for (int s : series_orders) top = std::max(top, s);
  const auto lambda_beta = rspt_ground_state(top);

  std::vector<CurvePoint> rows;
  for (int s : implicit_orders) {
    std::optional<double> warm;
    for (double f : field_grid) {
      auto point = solve_implicit(lambda_beta, f, s, warm);
      if (point.converged) warm = point.lambda;
      rows.push_back(std::move(point));
    }
  }
  for (int s : series_orders) {
    const auto energy = energy_series_in_field(lambda_beta, s);
    for (double f : field_grid) {
      CurvePoint point{f, s, CurveMethod::PowerSeries, 0.0, evaluate_series(energy, f), true, 0, {}};
      if (point.energy < 0.0) {
        point.lambda = 1.0 / std::sqrt(-point.energy);
      } else {
        point.lambda = std::numeric_limits<double>::quiet_NaN();
        point.converged = false;
        point.diagnostic = "truncated series energy is not negative";
      }
      rows.push_back(std::move(point));
    }
  }
  return rows;
}

}  // namespace sturmian
