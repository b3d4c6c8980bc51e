#pragma once

#include "tsgeo/params.hpp"

namespace tsgeo {

/// Jump density of the untempered stable measure:
/// C+/x^{a+ + 1} for x > 0, C-/|x|^{a- + 1} for x < 0.
double stable_levy_density(double x, double c_plus, double c_minus,
                           double a_plus, double a_minus);

/// Tempering factor: exp(-lambda|x|) for the exponential families,
/// exp(-lambda x^2/2) for the Gaussian one. Throws DomainError at x = 0.
double tempering(double x, const ProcessSpec& spec);

/// Jump density tempering(x) * stable_levy_density(x).
double levy_density(double x, const ProcessSpec& spec);

/// log levy_density(x, spec), evaluated analytically so it stays finite far
/// into the tails where the density itself underflows.
double log_levy_density(double x, const ProcessSpec& spec);

/// Density of P's jump measure against Q's. Computed from the closed-form
/// exponent rather than the ratio of densities; the ratio identity is a test.
double radon_nikodym(double x, const MeasurePair& pair);

/// psi(x) = log radon_nikodym(x): piecewise linear in x for the exponential
/// families, piecewise quadratic for the Gaussian one, with limit 0 at 0.
double log_radon_nikodym(double x, const MeasurePair& pair);

/// d/d lambda_plus log levy_density at x (zero for x < 0), and the
/// lambda_minus analogue. These are the score functions of the decay chart.
double score_lambda_plus(double x, const ProcessSpec& spec);
double score_lambda_minus(double x, const ProcessSpec& spec);

/// Same derivatives taken through the tempering factor alone. The stable
/// factor carries no decay dependence, so these agree with the score_lambda_*
/// pair; keeping both routes lets the integral forms check each other.
double temper_score_plus(double x, const ProcessSpec& spec);
double temper_score_minus(double x, const ProcessSpec& spec);

}  // namespace tsgeo
