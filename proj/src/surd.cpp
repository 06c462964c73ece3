#include "sturmian/surd.hpp"

#include <cmath>

#include "sturmian/errors.hpp"

namespace sturmian {

Surd::Surd(Rational coefficient) : coefficient_(std::move(coefficient)), radicand_(1) {}

Surd::Surd(Rational coefficient, Integer radicand)
    : coefficient_(std::move(coefficient)), radicand_(std::move(radicand)) {
  if (sgn(coefficient_) == 0) radicand_ = 1;
}

Surd Surd::sqrt_of(const Integer& k) {
  if (sgn(k) < 0) throw DomainError("Surd::sqrt_of: negative argument");
  if (sgn(k) == 0) return Surd();
  Integer rest = k;
  Integer outside = 1;
  Integer square_free = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++exponent;
    }
    for (int e = 0; e < exponent / 2; ++e) outside *= p;
    if (exponent % 2 != 0) square_free *= p;
  }
  square_free *= rest;
  return Surd(Rational(outside), square_free);
}

Rational Surd::as_rational() const {
  if (!is_rational())
    throw ConsistencyError("expected a rational value, got " + to_string());
  return coefficient_;
}

double Surd::to_double() const { return coefficient_.get_d() * std::sqrt(radicand_.get_d()); }

std::string Surd::to_string() const {
  std::string s = coefficient_.get_str();
  if (radicand_ != 1) s += "*sqrt(" + radicand_.get_str() + ")";
  return s;
}

Surd Surd::operator-() const { return Surd(-coefficient_, radicand_); }

Surd operator*(const Surd& a, const Surd& b) {
  // Both radicands square-free: s1 s2 = g^2 (s1/g)(s2/g) with the cofactors
  // coprime and square-free.
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.radicand_.get_mpz_t(), b.radicand_.get_mpz_t());
  Integer radicand = (a.radicand_ / g) * (b.radicand_ / g);
  Rational coefficient = a.coefficient_ * b.coefficient_ * Rational(g);
  return Surd(std::move(coefficient), std::move(radicand));
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.is_zero()) throw DomainError("Surd: division by zero");
  // 1/(q sqrt(s)) = (1/(q s)) sqrt(s)
  const Surd inverse(1 / (b.coefficient_ * Rational(b.radicand_)), b.radicand_);
  return a * inverse;
}

bool operator==(const Surd& a, const Surd& b) {
  return a.coefficient_ == b.coefficient_ && a.radicand_ == b.radicand_;
}

}  // namespace sturmian
