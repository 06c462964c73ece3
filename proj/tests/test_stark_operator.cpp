#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sturmian/errors.hpp"
#include "sturmian/stark_operator.hpp"

using namespace sturmian;

TEST_CASE("surd arithmetic") {
  const Surd s = Surd::sqrt_of(24);
  CHECK(s.coefficient() == 2);
  CHECK(s.radicand() == 6);
  CHECK((s * Surd::sqrt_of(6)).as_rational() == 12);
  CHECK((s / Surd::sqrt_of(3)) == Surd::sqrt_of(8));
  CHECK(Surd::sqrt_of(0).is_zero());
  CHECK(Surd::sqrt_of(49).is_rational());
  CHECK_THROWS_AS(Surd::sqrt_of(2).as_rational(), ConsistencyError);
  CHECK(Surd::sqrt_of(2).to_double() == doctest::Approx(std::sqrt(2.0)));
  CHECK((-Surd::sqrt_of(12)).to_string() == "-2*sqrt(3)");
  CHECK_THROWS(Surd::sqrt_of(-1));
}

TEST_CASE("angular factors") {
  CHECK(angular_J(0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(angular_J_exact(0, 1) == Surd(Rational(1, 3)) * Surd::sqrt_of(3));
  CHECK(angular_J(1, 1) == 0.0);
  CHECK(angular_J(1, 3) == 0.0);
  for (int l = 0; l < 8; ++l) CHECK(angular_J_exact(l, l + 1) == angular_J_exact(l + 1, l));
}

TEST_CASE("radial factors") {
  CHECK(radial_I_exact(1, 0, 2, 1) == Surd(4) * Surd::sqrt_of(6));
  CHECK(radial_I(1, 0, 2, 1) == doctest::Approx(9.7979589711));
  CHECK(radial_I_exact(1, 0, 3, 1) == Surd(-2) * Surd::sqrt_of(6));
  CHECK(radial_I(1, 0, 1, 1) == 0.0);
  CHECK(radial_I(2, 0, 2, 2) == 0.0);
  for (int n = 2; n <= 8; ++n)
    for (int np = std::max(1, n - 2); np <= n + 2; ++np)
      for (int l = 1; l < std::min(n, np); ++l) CHECK(radial_I_exact(n, l, np, l - 1) == radial_I_exact(np, l - 1, n, l));
}

TEST_CASE("stark elements and selection rules") {
  const double beta = 0.37;
  CHECK(stark_element({1, 0, 0}, {2, 1, 0}, beta) == doctest::Approx(-4 * std::sqrt(2.0) * beta));
  CHECK(stark_element({1, 0, 0}, {4, 1, 0}, beta) == 0.0);
  CHECK(stark_element({2, 1, 0}, {2, 1, 0}, beta) == 0.0);
  CHECK(stark_element({2, 1, 1}, {2, 0, 0}, beta) == 0.0);
  CHECK_THROWS_AS(stark_coupling_exact({2, 1, 1}, {3, 2, 1}), UnsupportedFeature);
  CHECK(stark_element({3, 1, 0}, {4, 2, 0}, 2 * beta) == doctest::Approx(2 * stark_element({3, 1, 0}, {4, 2, 0}, beta)));

  const auto partners = band_partners({1, 0, 0});
  REQUIRE(partners.size() == 2);
  CHECK(partners[0] == QuantumIndex{2, 1, 0});
  CHECK(partners[1] == QuantumIndex{3, 1, 0});
  for (const auto& p : band_partners({5, 2, 0})) {
    CHECK(std::abs(p.l - 2) == 1);
    CHECK(std::abs(p.n - 5) <= 2);
    CHECK_FALSE(stark_coupling_exact({5, 2, 0}, p).is_zero());
  }
}

TEST_CASE("assembled matrix") {
  const auto m0 = assemble_matrix(BasisTruncation(3), 0.0);
  const std::vector<double> diag{1, 2, 2, 3, 3, 3};
  for (std::size_t i = 0; i < diag.size(); ++i) CHECK(m0.diagonal(i) == diag[i]);

  const auto m = assemble_matrix(BasisTruncation(2), 1.0);
  const Eigen::MatrixXd d = m.to_dense();
  CHECK(d(0, 2) == doctest::Approx(-4 * std::sqrt(2.0)));
  CHECK(d(2, 0) == d(0, 2));
  CHECK(d(0, 1) == 0.0);

  const auto big = assemble_matrix(BasisTruncation(12), 0.01);
  const Eigen::MatrixXd dense = big.to_dense();
  CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
  for (const auto& e : big.upper_entries()) {
    const auto& a = big.truncation()[e.row];
    const auto& b = big.truncation()[e.col];
    CHECK(std::abs(a.l - b.l) == 1);
    CHECK(std::abs(a.n - b.n) <= 2);
    CHECK(e.col - e.row <= big.bandwidth());
  }
  // Lexicographic (n, l) order with |dn| <= 2 keeps the band narrow.
  CHECK(big.bandwidth() <= 2 * 12 + 2);
  CHECK_THROWS(assemble_matrix(BasisTruncation(3, 1), 0.1));
}

TEST_CASE("quadrature oracle reproduces the analytic elements") {
  const auto e = quadrature_oracle_element({1, 0, 0}, {2, 1, 0}, 1.0);
  CHECK(e.sufficient);
  CHECK(e.value == doctest::Approx(-4 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(quadrature_oracle_element({3, 1, 0}, {3, 1, 0}, 1.0).value) < 1e-12);
  CHECK(std::abs(quadrature_oracle_element({3, 0, 0}, {4, 2, 0}, 1.0).value) < 1e-12);
  CHECK(std::abs(quadrature_oracle_element({1, 0, 0}, {4, 1, 0}, 1.0).value) < 1e-12);
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (const auto& p : band_partners({n, l, 0})) {
        const auto o = quadrature_oracle_element({n, l, 0}, p, 1.0);
        CHECK(o.value == doctest::Approx(stark_element({n, l, 0}, p, 1.0)).epsilon(1e-11));
      }
  CHECK_FALSE(quadrature_oracle_element({5, 1, 0}, {6, 2, 0}, 1.0, 3, 1).sufficient);
}

TEST_CASE("similarity scaling is rational") {
  CHECK(similarity_factor({2, 1, 0}) == Surd::sqrt_of(18));
  CHECK(similarity_factor({1, 0, 0}) == Surd(1));
  CHECK(scaled_stark_coupling({1, 0, 0}, {2, 1, 0}) == -24);
  const auto scaled = rational_similarity_scale(BasisTruncation(15));
  CHECK(scaled.dimension() == 120);
}

TEST_CASE("similarity transform preserves the spectrum") {
  const BasisTruncation t(6);
  const double beta = 0.02;
  const Eigen::MatrixXd sym = assemble_matrix(t, beta).to_dense();
  const Eigen::MatrixXd tilde = ScaledStarkMatrix(t).to_dense(beta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(sym);
  Eigen::EigenSolver<Eigen::MatrixXd> b(tilde);
  std::vector<double> ev(b.eigenvalues().size());
  for (Eigen::Index i = 0; i < b.eigenvalues().size(); ++i) {
    CHECK(std::abs(b.eigenvalues()[i].imag()) < 1e-10);
    ev[i] = b.eigenvalues()[i].real();
  }
  std::sort(ev.begin(), ev.end());
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(a.eigenvalues()[i]).epsilon(1e-10));
}
