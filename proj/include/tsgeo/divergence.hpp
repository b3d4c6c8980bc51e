#pragma once

#include "tsgeo/params.hpp"
#include "tsgeo/quadrature.hpp"

namespace tsgeo {

/// Closed-form alpha-divergence D^(alpha)(P || Q) of an equivalent pair.
///
/// Branch dispatch happens at exactly alpha = -1 (relative entropy) and
/// alpha = +1 (its dual); every other order uses the generic formula. The
/// result is T-linear, non-negative, and zero iff both decay pairs match.
/// Throws DomainError when the order lies outside the validity domain
/// (see kl_finiteness_domain).
double alpha_divergence(const MeasurePair& pair, double alpha);

/// Relative entropy KL(P || Q); identical to alpha_divergence(pair, -1).
double kl_divergence(const MeasurePair& pair);

/// Model-agnostic oracle: T times the adaptive quadrature of the
/// f-divergence integrand against Q's jump measure over
/// (-inf, -eps) u (eps, inf), with each tail mapped to a Gamma-type
/// integrand first (t = lambda~ x for the exponential families,
/// t = lambda~ x^2/2 for the Gaussian one). The reported error adds an
/// analytic bound on the mass excluded by the origin cut.
QuadResult alpha_divergence_quadrature(const MeasurePair& pair, double alpha,
                                       const QuadratureConfig& cfg = {});

/// Same integral with the integrand written through the logarithmic
/// Radon-Nikodym derivative psi(x); an independent route that must agree
/// with the density-ratio form to combined tolerance.
QuadResult alpha_divergence_psi_form(const MeasurePair& pair, double alpha,
                                     const QuadratureConfig& cfg = {});

}  // namespace tsgeo
