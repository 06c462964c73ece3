#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sturmian/quantum_index.hpp"
#include "sturmian/surd.hpp"

namespace sturmian {

enum class SeriesVariable { Beta, Field };

std::string to_string(SeriesVariable v);

/// Truncated power series sum_{s=0}^{max_order} c_s x^s with exact rational
/// coefficients. Coefficients past max_order are absent, not zero.
class RationalSeries {
 public:
  RationalSeries(SeriesVariable variable, std::vector<Rational> coefficients);

  SeriesVariable variable() const noexcept { return variable_; }
  int max_order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  /// Throws std::out_of_range past max_order.
  const Rational& coefficient(int power) const;

  /// Same series cut at a lower order.
  RationalSeries truncated(int order) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  SeriesVariable variable_;
  std::vector<Rational> coefficients_;
};

/// Horner evaluation; exact for rational x.
Rational evaluate_series(const RationalSeries& series, const Rational& x);
double evaluate_series(const RationalSeries& series, double x);
/// d/dx of the series at x.
double evaluate_series_derivative(const RationalSeries& series, double x);

/// m = 0 states reachable from (1,0,0) in at most `order` applications of
/// the Stark selection rules, lexicographic in (n, l).
std::vector<QuantumIndex> active_basis(int order);

/// Thrown when the recurrence runs out of memory; carries the orders that
/// did complete.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, RationalSeries partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RationalSeries& partial() const noexcept { return partial_; }

 private:
  RationalSeries partial_;
};

/// Rayleigh-Schroedinger series lambda(beta) = sum_s lambda^(s) beta^s for the
/// ground state, in exact rationals, on the active basis of max_order - 1
/// (which is sufficient for exactness).
RationalSeries rspt_ground_state(int max_order);

/// Same recurrence over every state of an explicit truncation; equals
/// rspt_ground_state whenever the truncation contains the active basis.
RationalSeries rspt_ground_state(const BasisTruncation& basis, int max_order);

}  // namespace sturmian
