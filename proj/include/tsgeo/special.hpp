#pragma once

#include <complex>

#include "tsgeo/errors.hpp"

namespace tsgeo {

using ComplexValue = std::complex<double>;

/// Truncation control for the confluent hypergeometric series.
struct SeriesConfig {
  double rel_tol = 1e-14;
  int max_terms = 500;
};

/// Real Gamma function on the real line away from the poles at 0, -1, -2, ...
///
/// Uses a Lanczos approximation (g = 7, 9 coefficients) on [1, 2] and the
/// recurrence Gamma(x+1) = x Gamma(x) to shift any other argument into that
/// window. Negative non-integer arguments are reached through the recurrence
/// rather than the reflection formula, which keeps accuracy near the poles.
///
/// Throws PoleError at zero and negative integers.
double gamma_real(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma_real(double x);

/// Kummer's confluent hypergeometric function M(a, b, z) by direct summation
/// of sum_n (a)_n / (b)_n z^n / n!.
///
/// The series stops once the current term's magnitude drops below
/// cfg.rel_tol times the magnitude of the partial sum. Throws
/// ConvergenceError when cfg.max_terms is reached first, DomainError when b
/// is zero or a negative integer.
///
/// For Re(z) < 0 the alternating terms cancel catastrophically; prefer
/// kummer_m, which reflects such arguments into the stable half plane.
ComplexValue kummer_m_series(double a, double b, ComplexValue z,
                             const SeriesConfig& cfg = {});

/// M(a, b, z) with a numerically stable evaluation on the whole plane
/// reachable by the series budget.
///
/// For Re(z) >= 0 this is the direct series. For Re(z) < 0 it applies the
/// Kummer transformation M(a,b,z) = e^z M(b-a, b, -z) so that the series is
/// summed at an argument with non-negative real part, where the terms do not
/// cancel. Arguments beyond |z| = 600 are refused (ConvergenceError): e^|z|
/// scale factors leave double range there and the asymptotic regime is out
/// of scope.
ComplexValue kummer_m(double a, double b, ComplexValue z,
                      const SeriesConfig& cfg = {});

}  // namespace tsgeo
