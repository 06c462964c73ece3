#include "sturmian/basis.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sturmian/errors.hpp"
#include "sturmian/quadrature.hpp"
#include "sturmian/special_functions.hpp"

namespace sturmian {

std::string to_string(const QuantumIndex& nu) {
  return "(" + std::to_string(nu.n) + "," + std::to_string(nu.l) + "," + std::to_string(nu.m) + ")";
}

void require_valid(const QuantumIndex& nu) {
  if (!nu.valid()) throw DomainError("invalid quantum index " + to_string(nu) + ": need 0 <= l <= n-1, |m| <= l");
}

BasisTruncation::BasisTruncation(int n_max, int m_sector) : n_max_(n_max), m_sector_(m_sector) {
  if (n_max < 1) throw DomainError("BasisTruncation: n_max must be >= 1");
  const int am = std::abs(m_sector);
  for (int n = 1; n <= n_max; ++n)
    for (int l = am; l <= n - 1; ++l) states_.push_back({n, l, m_sector});
}

std::size_t BasisTruncation::index_of(const QuantumIndex& nu) const noexcept {
  const auto it = std::lower_bound(states_.begin(), states_.end(), nu);
  if (it == states_.end() || *it != nu) return states_.size();
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t BasisTruncation::expected_count(int n_max, int m_sector) {
  std::size_t count = 0;
  const int am = std::abs(m_sector);
  for (int n = 1; n <= n_max; ++n)
    if (n - 1 >= am) count += static_cast<std::size_t>(n - am);
  return count;
}

ScaleParameter::ScaleParameter(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("ScaleParameter: a must be positive and finite");
}

ScaleParameter ScaleParameter::from_lambda(double lambda) { return ScaleParameter(lambda / 2.0); }

ScaleParameter ScaleParameter::from_energy(double energy_ry) {
  if (!(energy_ry < 0.0)) throw DomainError("ScaleParameter: bound-state energy must be negative");
  return ScaleParameter(0.5 * std::sqrt(-1.0 / energy_ry));
}

double sturmian_norm(int n, int l) {
  require_valid({n, l, 0});
  // (n+l)!/(n-l-1)! = prod_{k=n-l}^{n+l} k
  if (n + l <= 40) {
    mpz_class prod = 1;
    for (int k = n - l; k <= n + l; ++k) prod *= k;
    return 1.0 / std::sqrt(prod.get_d());
  }
  double log_prod = 0.0;
  for (int k = n - l; k <= n + l; ++k) log_prod += std::log(static_cast<double>(k));
  return std::exp(-0.5 * log_prod);
}

namespace {

void check_rho(double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("sturmian_radial: rho must be finite and >= 0");
}

}  // namespace

double sturmian_radial(int n, int l, double rho) {
  require_valid({n, l, 0});
  check_rho(rho);
  if (rho == 0.0) return 0.0;
  const double envelope = std::exp((l + 0.5) * std::log(rho) - 0.5 * rho);
  return sturmian_norm(n, l) * envelope * laguerre(n - l - 1, 2 * l + 1, rho);
}

double sturmian_radial_reduced(int n, int l, double rho) {
  require_valid({n, l, 0});
  check_rho(rho);
  double envelope;
  if (rho == 0.0)
    envelope = l == 0 ? 1.0 : 0.0;
  else
    envelope = std::exp(l * std::log(rho) - 0.5 * rho);
  return sturmian_norm(n, l) * envelope * laguerre(n - l - 1, 2 * l + 1, rho);
}

namespace {

struct Spherical {
  double r, theta, phi;
};

Spherical to_spherical(const Vec3& v) {
  const double r = std::hypot(v[0], v[1], v[2]);
  if (r == 0.0) return {0.0, 0.0, 0.0};
  return {r, std::acos(std::clamp(v[2] / r, -1.0, 1.0)), std::atan2(v[1], v[0])};
}

}  // namespace

std::complex<double> basis_function(const QuantumIndex& nu, const Vec3& r, const ScaleParameter& a) {
  require_valid(nu);
  const auto s = to_spherical(r);
  // y(rho) / sqrt(r a) = (y / sqrt(rho)) / a stays finite as r -> 0.
  const double radial = sturmian_radial_reduced(nu.n, nu.l, s.r / a.a()) / a.a();
  return radial * spherical_harmonic(nu.l, nu.m, s.theta, s.phi);
}

std::complex<double> coulomb_wavefunction(const QuantumIndex& nu, const Vec3& r) {
  require_valid(nu);
  const auto s = to_spherical(r);
  const double rho = 2.0 * s.r / nu.n;
  const double radial = 2.0 / (static_cast<double>(nu.n) * nu.n) * sturmian_radial_reduced(nu.n, nu.l, rho);
  return radial * spherical_harmonic(nu.l, nu.m, s.theta, s.phi);
}

double coulomb_scaling_prefactor(int n, const ScaleParameter& a) {
  return static_cast<double>(n) * n / (2.0 * a.a());
}

int orthonormality_required_order(const BasisTruncation& trunc) noexcept {
  return required_gauss_order(2 * trunc.n_max() - 1);
}

OrthonormalityReport orthonormality_residual(const BasisTruncation& trunc, int quad_order) {
  OrthonormalityReport report{trunc, quad_order, orthonormality_required_order(trunc), false, {}, 0.0};
  report.sufficient = quad_order >= report.required_order;
  const auto rule = gauss_laguerre(quad_order);
  const auto& states = trunc.states();
  const std::size_t dim = states.size();

  // values[i][k] = y_{n_i l_i}(x_k); then int y y' = sum_k (w_k e^{x_k}) y y'.
  std::vector<std::vector<double>> values(dim, std::vector<double>(rule.order()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rule.order(); ++k) values[i][k] = sturmian_radial(states[i].n, states[i].l, rule.nodes[k]);

  report.residual.assign(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      double overlap = 0.0;
      if (states[i].l == states[j].l) {
        for (std::size_t k = 0; k < rule.order(); ++k) overlap += rule.scaled_weights[k] * values[i][k] * values[j][k];
      }
      const double res = std::abs(overlap - (i == j ? 1.0 : 0.0));
      report.residual[i][j] = report.residual[j][i] = res;
      report.max_residual = std::max(report.max_residual, res);
    }
  }
  return report;
}

}  // namespace sturmian
