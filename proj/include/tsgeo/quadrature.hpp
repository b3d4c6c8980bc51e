#pragma once

#include <functional>

#include "tsgeo/errors.hpp"

namespace tsgeo {

/// Controls for the adaptive Gauss-Kronrod engine and for the exclusion
/// ball around x = 0 used when integrating against a jump measure.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  double origin_cut = 1e-10;  // epsilon: half-width excluded around x = 0
};

/// Integral estimate with its error bound.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive G7-K15 quadrature on the finite interval [a, b].
///
/// Bisects the interval with the largest error estimate until the summed
/// error drops below max(abs_tol, rel_tol * |value|); throws
/// ConvergenceError when max_subdivisions panels were not enough. The final
/// sum runs over panels ordered by left endpoint, so the result does not
/// depend on the refinement order.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, const QuadratureConfig& cfg);

/// Integral of f over (lo, +infinity) through the rational map
/// t = lo + u/(1-u). The integrand must decay fast enough that
/// f(t)/(1-u)^2 stays bounded, which holds for the exponentially damped
/// integrands this library produces.
QuadResult integrate_tail(const std::function<double(double)>& f, double lo,
                          const QuadratureConfig& cfg);

}  // namespace tsgeo
