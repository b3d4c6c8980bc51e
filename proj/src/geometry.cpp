#include "tsgeo/geometry.hpp"

#include <cmath>

#include "family_kernel.hpp"
#include "tsgeo/divergence.hpp"
#include "tsgeo/levy.hpp"
#include "tsgeo/special.hpp"

namespace tsgeo {

namespace {

using detail::KernelSide;
using detail::TailSide;

double metric_entry(const KernelSide& s, double lam, double t_horizon) {
  return t_horizon * s.k * gamma_real(2.0 - s.b) / std::pow(lam, 2.0 - s.b);
}

double lc_entry(const KernelSide& s, double lam, double t_horizon) {
  return -0.5 * t_horizon * s.k * gamma_real(3.0 - s.b) /
         std::pow(lam, 3.0 - s.b);
}

}  // namespace

Metric2 fisher_metric(const ProcessSpec& spec) {
  const GtsParams r = spec.reduced();
  Metric2 g;
  g.pp = metric_entry(detail::kernel_side(spec, true), r.lambda_plus,
                      spec.horizon_t());
  g.mm = metric_entry(detail::kernel_side(spec, false), r.lambda_minus,
                      spec.horizon_t());
  g.pm = 0.0;
  return g;
}

Connection2 levi_civita(const ProcessSpec& spec) {
  const GtsParams r = spec.reduced();
  Connection2 c;
  c.set(0, 0, 0, lc_entry(detail::kernel_side(spec, true), r.lambda_plus,
                          spec.horizon_t()));
  c.set(1, 1, 1, lc_entry(detail::kernel_side(spec, false), r.lambda_minus,
                          spec.horizon_t()));
  return c;
}

Connection2 alpha_connection(const ProcessSpec& spec, double alpha) {
  if (alpha == 1.0) return Connection2{};  // e-flat: identically zero
  Connection2 lc = levi_civita(spec);
  if (alpha == 0.0) return lc;  // the 0-connection is Levi-Civita
  Connection2 c;
  c.set(0, 0, 0, (1.0 - alpha) * lc(0, 0, 0));
  c.set(1, 1, 1, (1.0 - alpha) * lc(1, 1, 1));
  return c;
}

PairFactory emm_pair_factory(const ProcessSpec& spec) {
  return [spec](double lp, double lm, double lpt, double lmt) {
    return make_equivalent(spec.with_decays(lp, lm), lpt, lmt);
  };
}

namespace {

// Mixed second difference of the divergence in (coordinate i of P,
// coordinate j of Q) at coinciding decays, step h_i = h_rel * lambda_i.
double mixed_difference(const PairFactory& factory, double lp, double lm,
                        double alpha, int i, int j, double h_rel) {
  const double hi = h_rel * (i == 0 ? lp : lm);
  const double hj = h_rel * (j == 0 ? lp : lm);
  auto d = [&](double sp, double sq) {
    const double ap = i == 0 ? lp + sp : lp;
    const double am = i == 0 ? lm : lm + sp;
    const double bp = j == 0 ? lp + sq : lp;
    const double bm = j == 0 ? lm : lm + sq;
    return alpha_divergence(factory(ap, am, bp, bm), alpha);
  };
  const double num = d(hi, hj) - d(hi, -hj) - d(-hi, hj) + d(-hi, -hj);
  return -num / (4.0 * hi * hj);
}

}  // namespace

Metric2 metric_from_divergence(const PairFactory& factory,
                               const ProcessSpec& spec, double alpha,
                               double step) {
  if (!(step > 0.0)) throw DomainError("metric_from_divergence: step <= 0");
  const double lp = spec.lambda_plus();
  const double lm = spec.lambda_minus();

  double out[2][2] = {};
  double diag_scale = 0.0;
  // diagonals first so the off-diagonal stabilization floor has a scale
  for (const auto& [i, j] :
       {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 1}}) {
    const double coarse =
        mixed_difference(factory, lp, lm, alpha, i, j, 2.0 * step);
    const double mid = mixed_difference(factory, lp, lm, alpha, i, j, step);
    const double fine =
        mixed_difference(factory, lp, lm, alpha, i, j, 0.5 * step);
    const double r_mid = (4.0 * mid - coarse) / 3.0;
    const double r_fine = (4.0 * fine - mid) / 3.0;
    const double tol = std::max(1e-5 * std::abs(r_fine), 1e-7 * diag_scale);
    if (std::abs(r_fine - r_mid) > tol)
      throw ConvergenceError(
          "metric_from_divergence: Richardson refinement failed to stabilize");
    out[i][j] = r_fine;
    if (i == j) diag_scale = std::max(diag_scale, std::abs(r_fine));
  }
  return Metric2{out[0][0], out[1][1], out[0][1]};
}

Metric2 metric_from_divergence(const ProcessSpec& spec, double alpha,
                               double step) {
  return metric_from_divergence(emm_pair_factory(spec), spec, alpha, step);
}

namespace {

struct SideGeometry {
  QuadResult metric;
  QuadResult connection;
};

// Score-product and score-triple integrals over one tail. The score comes
// from the caller: either the jump-density route or the tempering-function
// route; the two must integrate to the same values and guard each other.
SideGeometry side_geometry(const ProcessSpec& spec, bool plus, double alpha,
                           const QuadratureConfig& cfg, bool temper_route) {
  const TailSide s = detail::tail_side(spec, plus);
  const double sign = plus ? 1.0 : -1.0;

  auto score = [&spec, sign, plus, temper_route](double y) {
    const double x = sign * y;
    if (temper_route)
      return plus ? temper_score_plus(x, spec) : temper_score_minus(x, spec);
    return plus ? score_lambda_plus(x, spec) : score_lambda_minus(x, spec);
  };

  auto metric_integrand = [&s, score](double y) {
    const double sc = score(y);
    return sc * sc * std::exp(detail::log_density(s, y));
  };
  // the log density is affine in the decay, so the Hessian part of the
  // connection integrand is identically zero
  auto connection_integrand = [&s, score, alpha](double y) {
    const double sc = score(y);
    return (0.0 + 0.5 * (1.0 - alpha) * sc * sc) * sc *
           std::exp(detail::log_density(s, y));
  };

  SideGeometry out;
  out.metric =
      detail::integrate_side_tail(metric_integrand, s.gaussian, s.lam, cfg);
  out.connection = detail::integrate_side_tail(connection_integrand,
                                               s.gaussian, s.lam, cfg);

  // excluded-origin bounds: |score|^2 and |score|^3 against the density
  const double eps = cfg.origin_cut;
  if (s.gaussian) {
    out.metric.error += 0.25 * s.c * std::pow(eps, 4.0 - s.a) / (4.0 - s.a);
    out.connection.error += 0.125 * s.c * std::pow(eps, 6.0 - s.a) / (6.0 - s.a);
  } else {
    out.metric.error += s.c * std::pow(eps, 2.0 - s.a) / (2.0 - s.a);
    out.connection.error += s.c * std::pow(eps, 3.0 - s.a) / (3.0 - s.a);
  }
  return out;
}

void check_routes(double a, double b, double err_a, double err_b,
                  const char* what) {
  const double tol = std::max(10.0 * (err_a + err_b), 1e-13 * std::abs(a));
  if (std::abs(a - b) > tol)
    throw ConvergenceError(std::string("geometry_quadrature: density and "
                                       "tempering routes disagree (") +
                           what + ")");
}

}  // namespace

std::pair<Metric2, Connection2> geometry_quadrature(
    const ProcessSpec& spec, double alpha, const QuadratureConfig& cfg) {
  const double t_horizon = spec.horizon_t();
  Metric2 g;
  Connection2 c;
  for (bool plus : {true, false}) {
    const SideGeometry density = side_geometry(spec, plus, alpha, cfg, false);
    const SideGeometry temper = side_geometry(spec, plus, alpha, cfg, true);
    check_routes(density.metric.value, temper.metric.value,
                 density.metric.error, temper.metric.error, "metric");
    check_routes(density.connection.value, temper.connection.value,
                 density.connection.error, temper.connection.error,
                 "connection");

    const int i = plus ? 0 : 1;
    if (plus)
      g.pp = t_horizon * density.metric.value;
    else
      g.mm = t_horizon * density.metric.value;
    c.set(i, i, i, t_horizon * density.connection.value);
  }
  g.pm = 0.0;  // disjoint supports: the cross integrand vanishes pointwise
  return {g, c};
}

}  // namespace tsgeo
