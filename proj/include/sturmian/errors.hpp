#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested feature exists in the theory but is not shipped (e.g. m != 0
/// angular elements).
class UnsupportedFeature : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal algebraic invariant did not hold. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative method failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Green's function energy sits on (or next to) a pole n - lambda = 0.
class PoleError : public std::runtime_error {
 public:
  PoleError(int resonant_n, double lambda)
      : std::runtime_error("energy is at a pole of the Green's function: lambda = " +
                           std::to_string(lambda) + " resonates with n = " +
                           std::to_string(resonant_n)),
        resonant_n_(resonant_n) {}

  int resonant_n() const noexcept { return resonant_n_; }

 private:
  int resonant_n_;
};

}  // namespace sturmian
