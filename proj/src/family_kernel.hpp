#pragma once

// Internal per-side reductions shared by the divergence and geometry closed
// forms and their quadrature oracles. Both the classical five-parameter
// record (through its seven-parameter view) and the Gaussian-tempered family
// (through b = a/2, k = 2^{-1-a/2} C) funnel into the same kernels, so the
// family reductions hold bit for bit by construction.

#include <cmath>
#include <functional>

#include "tsgeo/params.hpp"
#include "tsgeo/quadrature.hpp"

namespace tsgeo::detail {

// Exponent and prefactor of the Gamma-kernel closed forms.
struct KernelSide {
  double b;
  double k;
};

inline KernelSide kernel_side(const ProcessSpec& spec, bool plus) {
  const GtsParams r = spec.reduced();
  const double a = plus ? r.a_plus : r.a_minus;
  const double c = plus ? r.c_plus : r.c_minus;
  if (spec.kind() == ModelKind::RDTS)
    return KernelSide{a / 2.0, std::pow(2.0, -1.0 - a / 2.0) * c};
  return KernelSide{a, c};
}

// One measure's tail viewed from the positive axis, y = |x| > 0.
struct TailSide {
  double a, c, lam;
  bool gaussian;
};

inline TailSide tail_side(const ProcessSpec& spec, bool plus) {
  const GtsParams r = spec.reduced();
  return TailSide{plus ? r.a_plus : r.a_minus, plus ? r.c_plus : r.c_minus,
                  plus ? r.lambda_plus : r.lambda_minus,
                  spec.kind() == ModelKind::RDTS};
}

inline double temper_exp(const TailSide& s, double y) {
  return s.gaussian ? -0.5 * s.lam * y * y : -s.lam * y;
}

inline double log_density(const TailSide& s, double y) {
  return std::log(s.c) + temper_exp(s, y) - (s.a + 1.0) * std::log(y);
}

// Integral of h(y) over (eps, inf) after the Gamma substitution t = rate*y
// (exponential tempering) or t = rate*y^2/2 (Gaussian); the remaining
// half-line is handled by the engine's rational map.
inline QuadResult integrate_side_tail(const std::function<double(double)>& h,
                                      bool gaussian, double rate,
                                      const QuadratureConfig& cfg) {
  const double eps = cfg.origin_cut;
  if (!(eps > 0.0 && eps < 1.0))
    throw DomainError("QuadratureConfig: origin_cut must lie in (0,1)");
  if (gaussian) {
    const double t0 = 0.5 * rate * eps * eps;
    auto g = [&h, rate](double t) {
      const double y = std::sqrt(2.0 * t / rate);
      return h(y) / std::sqrt(2.0 * rate * t);
    };
    return integrate_tail(g, t0, cfg);
  }
  const double t0 = rate * eps;
  auto g = [&h, rate](double t) { return h(t / rate) / rate; };
  return integrate_tail(g, t0, cfg);
}

}  // namespace tsgeo::detail
