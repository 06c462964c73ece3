#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sturmian {

// Units throughout: lengths in Bohr radii a_B, energies in Rydberg.

using Vec3 = std::array<double, 3>;

/// Hydrogen quantum numbers (n, l, m) labelling a basis state.
struct QuantumIndex {
  int n = 1;
  int l = 0;
  int m = 0;

  bool valid() const noexcept { return n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l; }

  friend auto operator<=>(const QuantumIndex&, const QuantumIndex&) = default;
};

std::string to_string(const QuantumIndex& nu);

/// Throws DomainError unless nu satisfies 0 <= l <= n-1, |m| <= l.
void require_valid(const QuantumIndex& nu);

/// Finite slice n <= n_max of the complete set, within one m sector.
/// Enumeration is lexicographic in (n, l).
class BasisTruncation {
 public:
  explicit BasisTruncation(int n_max, int m_sector = 0);

  int n_max() const noexcept { return n_max_; }
  int m_sector() const noexcept { return m_sector_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<QuantumIndex>& states() const noexcept { return states_; }
  const QuantumIndex& operator[](std::size_t i) const { return states_[i]; }

  /// Position of nu in the enumeration, or size() if absent.
  std::size_t index_of(const QuantumIndex& nu) const noexcept;

  /// sum_{n=1}^{n_max} #{l : |m| <= l <= n-1}
  static std::size_t expected_count(int n_max, int m_sector);

 private:
  int n_max_;
  int m_sector_;
  std::vector<QuantumIndex> states_;
};

/// The common length scale a of the basis and the associated eigenvalue
/// lambda = 2a/a_B; the energy it corresponds to is E/Ry = -1/lambda^2.
class ScaleParameter {
 public:
  explicit ScaleParameter(double a);

  static ScaleParameter from_lambda(double lambda);
  /// a = (1/2) sqrt(1/(-E)) with E in Ry; requires E < 0.
  static ScaleParameter from_energy(double energy_ry);

  double a() const noexcept { return a_; }
  double lambda() const noexcept { return 2.0 * a_; }
  double energy() const noexcept { return -1.0 / (lambda() * lambda()); }

 private:
  double a_;
};

}  // namespace sturmian
