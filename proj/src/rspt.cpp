#include "sturmian/rspt.hpp"

#include <algorithm>
#include <map>
#include <new>
#include <set>

#include "sturmian/errors.hpp"
#include "sturmian/stark_operator.hpp"

namespace sturmian {

std::string to_string(SeriesVariable v) { return v == SeriesVariable::Beta ? "beta" : "field"; }

RationalSeries::RationalSeries(SeriesVariable variable, std::vector<Rational> coefficients)
    : variable_(variable), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("RationalSeries: need at least the constant term");
}

const Rational& RationalSeries::coefficient(int power) const {
  if (power < 0 || power > max_order())
    throw std::out_of_range("RationalSeries: power " + std::to_string(power) + " beyond max order " +
                            std::to_string(max_order()));
  return coefficients_[static_cast<std::size_t>(power)];
}

RationalSeries RationalSeries::truncated(int order) const {
  if (order < 0 || order > max_order()) throw DomainError("RationalSeries::truncated: order out of range");
  return RationalSeries(variable_, {coefficients_.begin(), coefficients_.begin() + order + 1});
}

Rational evaluate_series(const RationalSeries& series, const Rational& x) {
  Rational acc = 0;
  const auto& c = series.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double evaluate_series(const RationalSeries& series, double x) {
  double acc = 0.0;
  const auto& c = series.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

double evaluate_series_derivative(const RationalSeries& series, double x) {
  double acc = 0.0;
  const auto& c = series.coefficients();
  for (int k = series.max_order(); k >= 1; --k) acc = acc * x + k * c[static_cast<std::size_t>(k)].get_d();
  return acc;
}

std::vector<QuantumIndex> active_basis(int order) {
  if (order < 0) throw DomainError("active_basis: order must be >= 0");
  std::set<QuantumIndex> reached{{1, 0, 0}};
  std::vector<QuantumIndex> frontier{{1, 0, 0}};
  for (int step = 0; step < order; ++step) {
    std::vector<QuantumIndex> next;
    for (const auto& nu : frontier)
      for (const auto& partner : band_partners(nu))
        if (reached.insert(partner).second) next.push_back(partner);
    frontier = std::move(next);
  }
  return {reached.begin(), reached.end()};
}

namespace {

// Recurrence on the similarity-rescaled rational matrix. States must be sorted
// with the ground state first.
RationalSeries run_recurrence(const std::vector<QuantumIndex>& states, int max_order) {
  if (max_order < 1) throw DomainError("rspt_ground_state: max_order must be >= 1");
  if (states.empty() || states.front() != QuantumIndex{1, 0, 0})
    throw ConsistencyError("rspt: basis must start with the ground state");
  const std::size_t dim = states.size();

  std::vector<Rational> lambda{Rational(1)};
  try {
    std::map<QuantumIndex, std::size_t> position;
    for (std::size_t i = 0; i < dim; ++i) position.emplace(states[i], i);

    struct Link {
      std::size_t col;
      Rational value;
    };
    std::vector<std::vector<Link>> rows(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (const auto& partner : band_partners(states[i]))
        if (auto it = position.find(partner); it != position.end())
          rows[i].push_back({it->second, scaled_stark_coupling(states[i], partner)});

    // coefficients[s][i] = C~^(s) on state i; C~^(0) = delta_{i0}.
    std::vector<std::vector<Rational>> coefficients;
    coefficients.emplace_back(dim, Rational(0));
    coefficients[0][0] = 1;
    std::vector<Rational> energy_gap(dim);
    for (std::size_t i = 1; i < dim; ++i) energy_gap[i] = Rational(1, states[i].n - 1);

    for (int s = 1; s <= max_order; ++s) {
      const auto& previous = coefficients[static_cast<std::size_t>(s - 1)];
      Rational order_s = 0;
      for (const auto& link : rows[0]) order_s += link.value * previous[link.col];
      lambda.push_back(order_s);
      if (s == max_order) break;

      std::vector<Rational> next(dim, Rational(0));
      for (std::size_t i = 1; i < dim; ++i) {
        Rational acc = 0;
        for (const auto& link : rows[i])
          if (sgn(previous[link.col]) != 0) acc -= link.value * previous[link.col];
        for (int r = 1; r < s; ++r) {
          const auto& lower = coefficients[static_cast<std::size_t>(s - r)][i];
          if (sgn(lower) != 0 && sgn(lambda[static_cast<std::size_t>(r)]) != 0)
            acc += lambda[static_cast<std::size_t>(r)] * lower;
        }
        next[i] = acc * energy_gap[i];
      }
      coefficients.push_back(std::move(next));
    }
  } catch (const std::bad_alloc&) {
    throw ResourceError("rspt_ground_state: out of memory after order " + std::to_string(lambda.size() - 1),
                        RationalSeries(SeriesVariable::Beta, lambda));
  }
  return RationalSeries(SeriesVariable::Beta, std::move(lambda));
}

}  // namespace

RationalSeries rspt_ground_state(int max_order) {
  if (max_order < 1) throw DomainError("rspt_ground_state: max_order must be >= 1");
  return run_recurrence(active_basis(max_order - 1), max_order);
}

RationalSeries rspt_ground_state(const BasisTruncation& basis, int max_order) {
  if (basis.m_sector() != 0) throw UnsupportedFeature("rspt_ground_state: only the m = 0 sector is implemented");
  return run_recurrence(basis.states(), max_order);
}

}  // namespace sturmian
