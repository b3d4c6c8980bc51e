#include "tsgeo/divergence.hpp"

#include <cmath>

#include "family_kernel.hpp"
#include "tsgeo/levy.hpp"
#include "tsgeo/special.hpp"

namespace tsgeo {

namespace {

using detail::KernelSide;
using detail::TailSide;

// One tail of the closed-form divergence, without the horizon factor.
double side_closed(double b, double k, double lam, double lamt, double alpha) {
  if (lam == lamt) return 0.0;  // every bracket vanishes; keep the zero exact
  if (alpha == 1.0) return side_closed(b, k, lamt, lam, -1.0);
  const double g = gamma_real(-b);
  if (alpha == -1.0) {
    return k * g *
           ((b - 1.0) * std::pow(lam, b) - b * lamt * std::pow(lam, b - 1.0) +
            std::pow(lamt, b));
  }
  const double wm = (1.0 - alpha) / 2.0;
  const double wp = (1.0 + alpha) / 2.0;
  const double bracket = (wm * std::pow(lam, b) + wp * std::pow(lamt, b)) -
                         std::pow(wm * lam + wp * lamt, b);
  return 4.0 / (1.0 - alpha * alpha) * k * g * bracket;
}

void require_valid(const MeasurePair& pair, double alpha) {
  if (!kl_finiteness_domain(pair, alpha))
    throw DomainError("alpha-divergence undefined: mixed decay not positive");
}

// Analytic bound on the mass excluded by the origin cut. Near 0 the
// f-divergence integrand behaves like psi(y)^2/2 times the base density.
double origin_bound(const TailSide& p, const TailSide& q, double eps) {
  const double d = p.lam - q.lam;
  if (p.gaussian)
    return p.c * (0.25 * d * d) * std::pow(eps, 4.0 - p.a) / (4.0 - p.a);
  return p.c * (0.5 * d * d) * std::pow(eps, 2.0 - p.a) / (2.0 - p.a);
}

}  // namespace

double alpha_divergence(const MeasurePair& pair, double alpha) {
  require_valid(pair, alpha);
  const GtsParams p = pair.p().reduced();
  const GtsParams q = pair.q().reduced();
  const KernelSide plus = detail::kernel_side(pair.p(), true);
  const KernelSide minus = detail::kernel_side(pair.p(), false);
  const double sum =
      side_closed(plus.b, plus.k, p.lambda_plus, q.lambda_plus, alpha) +
      side_closed(minus.b, minus.k, p.lambda_minus, q.lambda_minus, alpha);
  return pair.p().horizon_t() * sum;
}

double kl_divergence(const MeasurePair& pair) {
  return alpha_divergence(pair, -1.0);
}

QuadResult alpha_divergence_quadrature(const MeasurePair& pair, double alpha,
                                       const QuadratureConfig& cfg) {
  require_valid(pair, alpha);
  QuadResult total;
  for (bool plus : {true, false}) {
    const TailSide sp = detail::tail_side(pair.p(), plus);
    const TailSide sq = detail::tail_side(pair.q(), plus);
    if (sp.lam == sq.lam) continue;  // integrand identically zero

    // f-divergence factor composed with the two log densities, exponents
    // merged before exponentiation so the tails neither overflow nor NaN.
    std::function<double(double)> h;
    if (alpha == -1.0) {
      h = [sp, sq](double y) {
        const double lp = detail::log_density(sp, y);
        const double lq = detail::log_density(sq, y);
        return std::exp(lp) * (lp - lq) - std::exp(lp) + std::exp(lq);
      };
    } else if (alpha == 1.0) {
      h = [sp, sq](double y) {
        const double lp = detail::log_density(sp, y);
        const double lq = detail::log_density(sq, y);
        return std::exp(lq) * (lq - lp) - std::exp(lq) + std::exp(lp);
      };
    } else {
      const double wm = (1.0 - alpha) / 2.0;
      const double wp = (1.0 + alpha) / 2.0;
      const double pre = 4.0 / (1.0 - alpha * alpha);
      h = [sp, sq, wm, wp, pre](double y) {
        const double lp = detail::log_density(sp, y);
        const double lq = detail::log_density(sq, y);
        return pre * (wm * std::exp(lp) + wp * std::exp(lq) -
                      std::exp(wm * lp + wp * lq));
      };
    }

    const QuadResult r = detail::integrate_side_tail(h, sq.gaussian, sq.lam, cfg);
    total.value += r.value;
    total.error += r.error + origin_bound(sp, sq, cfg.origin_cut);
  }
  total.value *= pair.p().horizon_t();
  total.error *= pair.p().horizon_t();
  return total;
}

QuadResult alpha_divergence_psi_form(const MeasurePair& pair, double alpha,
                                     const QuadratureConfig& cfg) {
  require_valid(pair, alpha);
  QuadResult total;
  for (bool plus : {true, false}) {
    const TailSide sp = detail::tail_side(pair.p(), plus);
    const TailSide sq = detail::tail_side(pair.q(), plus);
    if (sp.lam == sq.lam) continue;
    const double sign = plus ? 1.0 : -1.0;

    std::function<double(double)> h;
    double rate = sq.lam;
    if (alpha == 1.0) {
      // dual branch integrates against P's measure
      rate = sp.lam;
      h = [&pair, sp, sign](double y) {
        const double psi = log_radon_nikodym(sign * y, pair);
        const double lp = detail::log_density(sp, y);
        return (-psi - 1.0) * std::exp(-psi + lp) + std::exp(lp);
      };
    } else if (alpha == -1.0) {
      h = [&pair, sq, sign](double y) {
        const double psi = log_radon_nikodym(sign * y, pair);
        const double lq = detail::log_density(sq, y);
        return (psi - 1.0) * std::exp(psi + lq) + std::exp(lq);
      };
    } else {
      const double wm = (1.0 - alpha) / 2.0;
      const double wp = (1.0 + alpha) / 2.0;
      const double pre = 4.0 / (1.0 - alpha * alpha);
      h = [&pair, sq, sign, wm, wp, pre](double y) {
        const double psi = log_radon_nikodym(sign * y, pair);
        const double lq = detail::log_density(sq, y);
        return pre * (wm * std::exp(psi + lq) + wp * std::exp(lq) -
                      std::exp(wm * psi + lq));
      };
    }

    const QuadResult r = detail::integrate_side_tail(h, sp.gaussian, rate, cfg);
    total.value += r.value;
    total.error += r.error + origin_bound(sp, sq, cfg.origin_cut);
  }
  total.value *= pair.p().horizon_t();
  total.error *= pair.p().horizon_t();
  return total;
}

}  // namespace tsgeo
