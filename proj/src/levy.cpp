#include "tsgeo/levy.hpp"

#include <cmath>

namespace tsgeo {

namespace {

// The jump measure excludes the origin; a silent 0 or inf there would poison
// quadrature downstream, so anything within 1e-300 of zero is refused.
void check_x(double x) {
  if (!std::isfinite(x)) throw DomainError("levy: non-finite x");
  if (std::abs(x) < 1e-300) throw DomainError("levy: x = 0 excluded");
}

// Tempering exponent for one tail at distance y = |x| > 0.
double temper_exponent(ModelKind kind, double lambda, double y) {
  if (kind == ModelKind::RDTS) return -0.5 * lambda * y * y;
  return -lambda * y;
}

}  // namespace

double stable_levy_density(double x, double c_plus, double c_minus,
                           double a_plus, double a_minus) {
  check_x(x);
  if (x > 0.0) return c_plus / std::pow(x, a_plus + 1.0);
  return c_minus / std::pow(-x, a_minus + 1.0);
}

double tempering(double x, const ProcessSpec& spec) {
  check_x(x);
  const GtsParams r = spec.reduced();
  const double lambda = x > 0.0 ? r.lambda_plus : r.lambda_minus;
  return std::exp(temper_exponent(spec.kind(), lambda, std::abs(x)));
}

double levy_density(double x, const ProcessSpec& spec) {
  const GtsParams r = spec.reduced();
  return tempering(x, spec) *
         stable_levy_density(x, r.c_plus, r.c_minus, r.a_plus, r.a_minus);
}

double log_levy_density(double x, const ProcessSpec& spec) {
  check_x(x);
  const GtsParams r = spec.reduced();
  const double y = std::abs(x);
  const double a = x > 0.0 ? r.a_plus : r.a_minus;
  const double c = x > 0.0 ? r.c_plus : r.c_minus;
  const double lambda = x > 0.0 ? r.lambda_plus : r.lambda_minus;
  return std::log(c) + temper_exponent(spec.kind(), lambda, y) -
         (a + 1.0) * std::log(y);
}

double log_radon_nikodym(double x, const MeasurePair& pair) {
  check_x(x);
  const GtsParams p = pair.p().reduced();
  const GtsParams q = pair.q().reduced();
  const double y = std::abs(x);
  const double dl = x > 0.0 ? p.lambda_plus - q.lambda_plus
                            : p.lambda_minus - q.lambda_minus;
  if (pair.p().kind() == ModelKind::RDTS) return -0.5 * dl * y * y;
  return -dl * y;
}

double radon_nikodym(double x, const MeasurePair& pair) {
  return std::exp(log_radon_nikodym(x, pair));
}

double score_lambda_plus(double x, const ProcessSpec& spec) {
  check_x(x);
  if (x < 0.0) return 0.0;
  return spec.kind() == ModelKind::RDTS ? -0.5 * x * x : -x;
}

double score_lambda_minus(double x, const ProcessSpec& spec) {
  check_x(x);
  if (x > 0.0) return 0.0;
  const double y = -x;
  return spec.kind() == ModelKind::RDTS ? -0.5 * y * y : -y;
}

double temper_score_plus(double x, const ProcessSpec& spec) {
  check_x(x);
  if (x < 0.0) return 0.0;
  // d/d lambda of the tempering exponent on the positive tail
  return spec.kind() == ModelKind::RDTS ? -0.5 * x * x : -x;
}

double temper_score_minus(double x, const ProcessSpec& spec) {
  check_x(x);
  if (x > 0.0) return 0.0;
  const double y = -x;
  return spec.kind() == ModelKind::RDTS ? -0.5 * y * y : -y;
}

}  // namespace tsgeo
