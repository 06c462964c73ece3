#pragma once

#include <gmpxx.h>

#include <string>

namespace sturmian {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact real number of the form q * sqrt(s): q rational, s a square-free
/// positive integer. Closed under multiplication and division, which is all
/// the analytic matrix elements need; the float value is derived from the
/// same representation so the two paths cannot drift apart.
class Surd {
 public:
  Surd() = default;
  Surd(Rational coefficient);  // NOLINT(google-explicit-constructor)
  Surd(long value) : Surd(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(k) for k >= 0, with square factors pulled into the coefficient.
  static Surd sqrt_of(const Integer& k);

  const Rational& coefficient() const noexcept { return coefficient_; }
  const Integer& radicand() const noexcept { return radicand_; }

  bool is_zero() const { return sgn(coefficient_) == 0; }
  bool is_rational() const { return radicand_ == 1 || is_zero(); }
  /// Throws ConsistencyError if not rational.
  Rational as_rational() const;

  double to_double() const;
  std::string to_string() const;

  Surd operator-() const;
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b);

 private:
  Surd(Rational coefficient, Integer radicand);

  Rational coefficient_ = 0;
  Integer radicand_ = 1;
};

}  // namespace sturmian
