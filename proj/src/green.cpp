#include "sturmian/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sturmian/basis.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/quadrature.hpp"
#include "sturmian/special_functions.hpp"

namespace sturmian {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double norm3(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

double cos_angle(const Vec3& a, const Vec3& b) {
  const double na = norm3(a);
  const double nb = norm3(b);
  if (na == 0.0 || nb == 0.0) return 1.0;  // only l = 0 survives there
  return std::clamp((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) / (na * nb), -1.0, 1.0);
}

double lambda_of(double energy_ry, int n_max) {
  if (!(energy_ry < 0.0) || !std::isfinite(energy_ry))
    throw DomainError("green_function: energy must be negative (bound-state region)");
  if (n_max < 1) throw DomainError("green_function: n_max must be >= 1");
  return 1.0 / std::sqrt(-energy_ry);
}

}  // namespace

void check_pole(double lambda, int n_max, double tolerance) {
  const double nearest = std::round(lambda);
  if (nearest >= 1.0 && nearest <= n_max && std::abs(lambda - nearest) <= tolerance)
    throw PoleError(static_cast<int>(nearest), lambda);
}

GreenEvaluation green_function(double energy_ry, const Vec3& r, const Vec3& r_prime, int n_max,
                               double pole_tolerance) {
  const double lambda = lambda_of(energy_ry, n_max);
  check_pole(lambda, n_max, pole_tolerance);
  const double a = lambda / 2.0;
  const double rho = norm3(r) / a;
  const double rho_prime = norm3(r_prime) / a;

  std::vector<double> legendre(static_cast<std::size_t>(n_max));
  legendre_table(cos_angle(r, r_prime), legendre);

  GreenEvaluation out{energy_ry, r, r_prime, n_max, 0.0, {}};
  out.partial_sums.reserve(static_cast<std::size_t>(n_max));
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    double shell = 0.0;
    for (int l = 0; l < n; ++l) {
      shell += sturmian_radial_reduced(n, l, rho) * sturmian_radial_reduced(n, l, rho_prime) * (2 * l + 1) /
               kFourPi * legendre[static_cast<std::size_t>(l)];
    }
    sum += shell / ((n - lambda) * a);
    out.partial_sums.push_back(sum);
  }
  out.value = sum;
  return out;
}

double green_function_direct(double energy_ry, const Vec3& r, const Vec3& r_prime, int n_max,
                             double pole_tolerance) {
  const double lambda = lambda_of(energy_ry, n_max);
  check_pole(lambda, n_max, pole_tolerance);
  const ScaleParameter scale = ScaleParameter::from_lambda(lambda);
  std::complex<double> sum = 0.0;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m) {
        const QuantumIndex nu{n, l, m};
        sum += std::conj(basis_function(nu, r_prime, scale)) * basis_function(nu, r, scale) / (n - lambda);
      }
  return scale.a() * sum.real();
}

ResolventCheck resolvent_residual(double energy_ry, const QuantumIndex& nu, const std::vector<Vec3>& points,
                                  int n_max) {
  require_valid(nu);
  if (nu.m != 0) throw UnsupportedFeature("resolvent_residual: only m = 0 sources are implemented");
  const double lambda = lambda_of(energy_ry, n_max);
  check_pole(lambda, n_max, 1e-9);
  const ScaleParameter scale = ScaleParameter::from_lambda(lambda);
  const double a = scale.a();

  // Integrand degrees: radial y_nl y_nu ~ e^{-x} x poly of degree n + n_nu - 1;
  // angular P_l(t) P_{l_nu}(t) of degree l + l_nu; P_l(cos gamma) is a
  // trigonometric polynomial of degree l in phi'.
  const auto radial = gauss_laguerre(required_gauss_order(n_max + nu.n - 1) + 4);
  const auto polar = gauss_legendre(required_gauss_order(n_max - 1 + nu.l) + 4);
  const int azimuthal = 2 * n_max + 2;

  // y_nl(x_k) for l < n <= n_max, and y_nu(x_k).
  std::vector<std::vector<std::vector<double>>> y(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    y[n].resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      auto& col = y[n][static_cast<std::size_t>(l)];
      col.resize(radial.order());
      for (std::size_t k = 0; k < radial.order(); ++k) col[k] = sturmian_radial(n, l, radial.nodes[k]);
    }
  }
  std::vector<double> y_source(radial.order());
  for (std::size_t k = 0; k < radial.order(); ++k) y_source[k] = sturmian_radial(nu.n, nu.l, radial.nodes[k]);

  // Source angular factor and directions of the angular nodes.
  struct AngularNode {
    Vec3 direction;
    double weight;  // includes Y_{l_nu 0}(theta')
  };
  std::vector<AngularNode> angular;
  angular.reserve(polar.order() * static_cast<std::size_t>(azimuthal));
  for (std::size_t j = 0; j < polar.order(); ++j) {
    const double t = polar.nodes[j];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double source = spherical_harmonic(nu.l, 0, std::acos(t), 0.0).real();
    for (int q = 0; q < azimuthal; ++q) {
      const double phi = 2.0 * std::numbers::pi * q / azimuthal;
      angular.push_back({{s * std::cos(phi), s * std::sin(phi), t},
                         polar.weights[j] * (2.0 * std::numbers::pi / azimuthal) * source});
    }
  }

  ResolventCheck out{nu, 0.0, 0.0};
  std::vector<double> legendre(static_cast<std::size_t>(n_max));
  for (const auto& point : points) {
    const double rho = norm3(point) / a;
    // radial_part[l] = sum_k w_k e^{x_k} sum_n y~_nl(rho) y_nl(x_k) y_nu(x_k) / (n - lambda)
    std::vector<double> radial_part(static_cast<std::size_t>(n_max), 0.0);
    for (int l = 0; l < n_max; ++l) {
      for (int n = l + 1; n <= n_max; ++n) {
        const double outer = sturmian_radial_reduced(n, l, rho) / (n - lambda);
        double inner = 0.0;
        const auto& col = y[n][static_cast<std::size_t>(l)];
        for (std::size_t k = 0; k < radial.order(); ++k) inner += radial.scaled_weights[k] * col[k] * y_source[k];
        radial_part[static_cast<std::size_t>(l)] += outer * inner;
      }
    }
    double angular_sum = 0.0;
    for (const auto& node : angular) {
      legendre_table(cos_angle(point, node.direction), legendre);
      double kernel = 0.0;
      for (int l = 0; l < n_max; ++l)
        kernel += radial_part[static_cast<std::size_t>(l)] * (2 * l + 1) / kFourPi * legendre[static_cast<std::size_t>(l)];
      angular_sum += node.weight * kernel;
    }
    const double integral = (nu.n - lambda) / a * angular_sum;
    const double expected = basis_function(nu, point, scale).real();
    out.max_residual = std::max(out.max_residual, std::abs(integral - expected));
    out.max_value = std::max(out.max_value, std::abs(expected));
  }
  return out;
}

}  // namespace sturmian
