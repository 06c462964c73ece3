#pragma once

#include <complex>
#include <span>

namespace sturmian {

/// Generalized Laguerre polynomial L_p^q(x) by the upward three-term
/// recurrence in p. Throws DomainError for p < 0, q < 0 or non-finite x.
double laguerre(int p, int q, double x);

/// Fills out[k] = L_k^q(x) for k = 0..out.size()-1.
void laguerre_table(int q, double x, std::span<double> out);

/// Legendre polynomials P_0..P_{out.size()-1} at t by recurrence.
void legendre_table(double t, std::span<double> out);

/// Spherical harmonic Y_lm(theta, phi), physics convention with the
/// Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace sturmian
