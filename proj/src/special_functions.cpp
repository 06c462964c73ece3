#include "sturmian/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "sturmian/errors.hpp"

namespace sturmian {

double laguerre(int p, int q, double x) {
  if (p < 0 || q < 0) throw DomainError("laguerre: degree and superscript must be non-negative");
  if (!std::isfinite(x)) throw DomainError("laguerre: argument must be finite");
  double prev = 1.0;
  if (p == 0) return prev;
  double cur = 1.0 + q - x;
  for (int k = 1; k < p; ++k) {
    const double next = ((2 * k + 1 + q - x) * cur - (k + q) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

void laguerre_table(int q, double x, std::span<double> out) {
  if (q < 0) throw DomainError("laguerre: superscript must be non-negative");
  if (!std::isfinite(x)) throw DomainError("laguerre: argument must be finite");
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = 1.0 + q - x;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = ((2 * kk + 1 + q - x) * out[k] - (kk + q) * out[k - 1]) / (kk + 1);
  }
}

void legendre_table(double t, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = t;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = ((2 * kk + 1) * t * out[k] - kk * out[k - 1]) / (kk + 1);
  }
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("spherical_harmonic: need |m| <= l");
  const int am = std::abs(m);
  // std::sph_legendre carries the Condon-Shortley phase already.
  const double theta_part = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta);
  std::complex<double> y = theta_part * std::polar(1.0, am * phi);
  if (m < 0) {
    y = std::conj(y);
    if (am % 2 != 0) y = -y;
  }
  return y;
}

}  // namespace sturmian
