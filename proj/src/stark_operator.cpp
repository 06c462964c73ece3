#include "sturmian/stark_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sturmian/basis.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/quadrature.hpp"
#include "sturmian/special_functions.hpp"

namespace sturmian {

namespace {

Surd sqrt_product(std::initializer_list<long> factors) {
  Integer prod = 1;
  for (long f : factors) {
    if (f < 0) throw ConsistencyError("negative factor under a square root in a Stark matrix element");
    prod *= f;
  }
  return Surd::sqrt_of(prod);
}

// Closed form for l' = l + 1.
Surd radial_I_raise(long n, long l, long n_prime) {
  switch (n_prime - n) {
    case 2: return -sqrt_product({n - l, n + l + 1, n + l + 2, n + l + 3});
    case 1: return Surd(2 * (2 * n - l)) * sqrt_product({n + l + 1, n + l + 2});
    case 0: return Surd(-6 * n) * sqrt_product({n - l - 1, n + l + 1});
    case -1: return Surd(2 * (2 * n + l)) * sqrt_product({n - l - 1, n - l - 2});
    case -2: return -sqrt_product({n + l, n - l - 1, n - l - 2, n - l - 3});
    default: return Surd();
  }
}

}  // namespace

Surd angular_J_exact(int l, int l_prime) {
  if (l < 0 || l_prime < 0) throw DomainError("angular_J: l must be non-negative");
  if (l_prime == l + 1) return Surd(l + 1) / sqrt_product({2L * l + 1, 2L * l + 3});
  if (l_prime == l - 1) return Surd(l) / sqrt_product({2L * l + 1, 2L * l - 1});
  return Surd();
}

double angular_J(int l, int l_prime) { return angular_J_exact(l, l_prime).to_double(); }

Surd radial_I_exact(int n, int l, int n_prime, int l_prime) {
  if (n < 1 || n_prime < 1 || l < 0 || l_prime < 0) throw DomainError("radial_I: need n >= 1 and l >= 0");
  if (l > n - 1 || l_prime > n_prime - 1) return Surd();
  if (l_prime == l + 1) return radial_I_raise(n, l, n_prime);
  if (l_prime == l - 1) return radial_I_raise(n_prime, l_prime, n);
  return Surd();
}

double radial_I(int n, int l, int n_prime, int l_prime) { return radial_I_exact(n, l, n_prime, l_prime).to_double(); }

Surd stark_coupling_exact(const QuantumIndex& nu, const QuantumIndex& nu_prime) {
  require_valid(nu);
  require_valid(nu_prime);
  if (nu.m != nu_prime.m) return Surd();
  if (nu.m != 0) throw UnsupportedFeature("Stark matrix elements are implemented for m = 0 only");
  const Surd angular = angular_J_exact(nu.l, nu_prime.l);
  if (angular.is_zero()) return Surd();
  return -(angular * radial_I_exact(nu.n, nu.l, nu_prime.n, nu_prime.l));
}

double stark_element(const QuantumIndex& nu, const QuantumIndex& nu_prime, double beta) {
  return beta * stark_coupling_exact(nu, nu_prime).to_double();
}

std::vector<QuantumIndex> band_partners(const QuantumIndex& nu) {
  require_valid(nu);
  std::vector<QuantumIndex> out;
  for (int n_prime = std::max(1, nu.n - 2); n_prime <= nu.n + 2; ++n_prime) {
    for (int l_prime : {nu.l - 1, nu.l + 1}) {
      const QuantumIndex partner{n_prime, l_prime, nu.m};
      if (!partner.valid()) continue;
      if (!stark_coupling_exact(nu, partner).is_zero()) out.push_back(partner);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PerturbationMatrix::PerturbationMatrix(BasisTruncation truncation, double beta, std::vector<Entry> upper)
    : truncation_(std::move(truncation)), beta_(beta), upper_(std::move(upper)) {
  std::sort(upper_.begin(), upper_.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
}

double PerturbationMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return diagonal(i);
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(upper_.begin(), upper_.end(), std::pair{i, j}, [](const Entry& e, const auto& key) {
    return std::tie(e.row, e.col) < std::tie(key.first, key.second);
  });
  return (it != upper_.end() && it->row == i && it->col == j) ? it->value : 0.0;
}

Eigen::MatrixXd PerturbationMatrix::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < dimension(); ++i) m(i, i) = diagonal(i);
  for (const auto& e : upper_) {
    m(e.row, e.col) = e.value;
    m(e.col, e.row) = e.value;
  }
  return m;
}

std::size_t PerturbationMatrix::bandwidth() const noexcept {
  std::size_t width = 0;
  for (const auto& e : upper_) width = std::max(width, e.col - e.row);
  return width;
}

PerturbationMatrix assemble_matrix(const BasisTruncation& trunc, double beta) {
  if (trunc.m_sector() != 0) throw UnsupportedFeature("assemble_matrix: only the m = 0 sector is implemented");
  std::vector<PerturbationMatrix::Entry> upper;
  if (beta != 0.0) {
    for (std::size_t i = 0; i < trunc.size(); ++i) {
      for (const auto& partner : band_partners(trunc[i])) {
        const std::size_t j = trunc.index_of(partner);
        if (j == trunc.size() || j <= i) continue;
        upper.push_back({i, j, stark_element(trunc[i], partner, beta)});
      }
    }
  }
  return PerturbationMatrix(trunc, beta, std::move(upper));
}

OracleElement quadrature_oracle_element(const QuantumIndex& nu, const QuantumIndex& nu_prime, double beta,
                                        int radial_order, int angular_order) {
  require_valid(nu);
  require_valid(nu_prime);
  if (nu.m != 0 || nu_prime.m != 0) throw UnsupportedFeature("quadrature oracle is implemented for m = 0 only");

  // e^{-rho} rho^{l+l'+3} L L' has degree n + n' + 1; t P_l P_l' has degree l + l' + 1.
  const int radial_needed = required_gauss_order(nu.n + nu_prime.n + 1);
  const int angular_needed = required_gauss_order(nu.l + nu_prime.l + 1);
  OracleElement out;
  out.radial_order = radial_order > 0 ? radial_order : radial_needed;
  out.angular_order = angular_order > 0 ? angular_order : angular_needed;
  out.sufficient = out.radial_order >= radial_needed && out.angular_order >= angular_needed;

  const auto radial_rule = gauss_laguerre(out.radial_order);
  double radial = 0.0;
  for (std::size_t k = 0; k < radial_rule.order(); ++k) {
    const double rho = radial_rule.nodes[k];
    radial += radial_rule.scaled_weights[k] * sturmian_radial(nu.n, nu.l, rho) * rho * rho *
              sturmian_radial(nu_prime.n, nu_prime.l, rho);
  }

  const auto angular_rule = gauss_legendre(out.angular_order);
  double angular = 0.0;
  for (std::size_t k = 0; k < angular_rule.order(); ++k) {
    const double t = angular_rule.nodes[k];
    const double theta = std::acos(t);
    angular += angular_rule.weights[k] * spherical_harmonic(nu.l, 0, theta, 0.0).real() * t *
               spherical_harmonic(nu_prime.l, 0, theta, 0.0).real();
  }
  angular *= 2.0 * std::numbers::pi;

  out.value = -beta * angular * radial;
  return out;
}

Surd similarity_factor(const QuantumIndex& nu) {
  require_valid(nu);
  Surd value = Surd::sqrt_of(2 * nu.l + 1);
  for (int k = nu.n - nu.l; k <= nu.n + nu.l; ++k) value = value * Surd::sqrt_of(k);
  return value;
}

std::vector<Surd> similarity_scale(const BasisTruncation& trunc) {
  std::vector<Surd> d;
  d.reserve(trunc.size());
  for (const auto& nu : trunc.states()) d.push_back(similarity_factor(nu));
  return d;
}

namespace {

Rational checked_rational(const Surd& scaled, const QuantumIndex& nu, const QuantumIndex& partner) {
  if (!scaled.is_rational())
    throw ConsistencyError("similarity-scaled Stark element " + to_string(nu) + " -> " + to_string(partner) +
                           " is not rational: " + scaled.to_string());
  return scaled.coefficient();
}

}  // namespace

Rational scaled_stark_coupling(const QuantumIndex& nu, const QuantumIndex& nu_prime) {
  const Surd scaled = stark_coupling_exact(nu, nu_prime) * similarity_factor(nu_prime) / similarity_factor(nu);
  return checked_rational(scaled, nu, nu_prime);
}

ScaledStarkMatrix::ScaledStarkMatrix(BasisTruncation truncation)
    : truncation_(std::move(truncation)), scale_(similarity_scale(truncation_)), rows_(truncation_.size()) {
  if (truncation_.m_sector() != 0) throw UnsupportedFeature("rational_similarity_scale: only m = 0 is implemented");
  for (std::size_t i = 0; i < truncation_.size(); ++i) {
    for (const auto& partner : band_partners(truncation_[i])) {
      const std::size_t j = truncation_.index_of(partner);
      if (j == truncation_.size()) continue;
      const Surd scaled = stark_coupling_exact(truncation_[i], partner) * scale_[j] / scale_[i];
      rows_[i].push_back({j, checked_rational(scaled, truncation_[i], partner)});
    }
  }
}

Eigen::MatrixXd ScaledStarkMatrix::to_dense(double beta) const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < dimension(); ++i) {
    m(i, i) = static_cast<double>(diagonal(i));
    for (const auto& c : rows_[i]) m(i, c.col) = beta * c.value.get_d();
  }
  return m;
}

ScaledStarkMatrix rational_similarity_scale(const BasisTruncation& trunc) { return ScaledStarkMatrix(trunc); }

}  // namespace sturmian
