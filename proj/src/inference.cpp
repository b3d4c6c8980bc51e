#include "tsgeo/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tsgeo/geometry.hpp"

namespace tsgeo {

double jeffreys_prior(const ProcessSpec& spec) {
  const Metric2 g = fisher_metric(spec);
  return std::sqrt(g.pp * g.mm);
}

double penalized_loglik(double loglik, const ProcessSpec& spec) {
  return loglik + std::log(jeffreys_prior(spec));
}

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::phi1: return "phi1";
    case AnsatzKind::phi2: return "phi2";
    case AnsatzKind::phi3: return "phi3";
    case AnsatzKind::phi4: return "phi4";
  }
  throw DomainError("unknown AnsatzKind");
}

AnsatzKind ansatz_kind_from_string(const std::string& tag) {
  if (tag == "phi1") return AnsatzKind::phi1;
  if (tag == "phi2") return AnsatzKind::phi2;
  if (tag == "phi3") return AnsatzKind::phi3;
  if (tag == "phi4") return AnsatzKind::phi4;
  throw DomainError("unknown ansatz kind '" + tag + "'");
}

namespace {

void check_exponent(double e, double a, const char* name) {
  const double lo = std::min(0.0, a - 1.0);
  const double hi = std::max(0.0, a - 1.0);
  if (!(e > lo && e < hi))
    throw DomainError(std::string(name) +
                      " outside the open interval (min(0,a-1), max(0,a-1))");
}

double ansatz_value(const AnsatzSpec& an, double lp, double lm) {
  switch (an.kind) {
    case AnsatzKind::phi1: return std::pow(lp, an.k);
    case AnsatzKind::phi2: return std::pow(lm, an.l);
    case AnsatzKind::phi3:
      return an.c1 * std::pow(lp, an.k) + an.c2 * std::pow(lm, an.l);
    case AnsatzKind::phi4: return std::pow(lp, an.k) * std::pow(lm, an.l);
  }
  throw DomainError("unknown AnsatzKind");
}

}  // namespace

void check_ansatz(const ProcessSpec& spec, const AnsatzSpec& an) {
  const GtsParams r = spec.reduced();
  switch (an.kind) {
    case AnsatzKind::phi1:
      check_exponent(an.k, r.a_plus, "k");
      return;
    case AnsatzKind::phi2:
      check_exponent(an.l, r.a_minus, "l");
      return;
    case AnsatzKind::phi3:
      if (!(an.c1 > 0.0)) throw DomainError("c1 <= 0");
      if (!(an.c2 > 0.0)) throw DomainError("c2 <= 0");
      check_exponent(an.k, r.a_plus, "k");
      check_exponent(an.l, r.a_minus, "l");
      return;
    case AnsatzKind::phi4:
      check_exponent(an.k, r.a_plus, "k");
      check_exponent(an.l, r.a_minus, "l");
      return;
  }
  throw DomainError("unknown AnsatzKind");
}

double evaluate_ansatz(const ProcessSpec& spec, const AnsatzSpec& an) {
  check_ansatz(spec, an);
  return ansatz_value(an, spec.lambda_plus(), spec.lambda_minus());
}

double laplace_beltrami(const ProcessSpec& spec,
                        const std::function<double(double, double)>& phi,
                        double step) {
  if (!(step > 0.0)) throw DomainError("laplace_beltrami: step <= 0");
  const double lp = spec.lambda_plus();
  const double lm = spec.lambda_minus();

  auto inv_metric = [&spec](int i, double p, double m) {
    const Metric2 g = fisher_metric(spec.with_decays(p, m));
    return 1.0 / (i == 0 ? g.pp : g.mm);
  };

  // conservative stencil: d_i(G^i d_i phi) with the coefficient at the half
  // points and phi at the full points
  auto apply = [&](double h_rel) {
    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double h = h_rel * (i == 0 ? lp : lm);
      const double pp = i == 0 ? lp + h : lp;
      const double pm = i == 0 ? lm : lm + h;
      const double mp = i == 0 ? lp - h : lp;
      const double mm = i == 0 ? lm : lm - h;
      const double hp = i == 0 ? lp + 0.5 * h : lp;
      const double hm = i == 0 ? lm : lm + 0.5 * h;
      const double gp = i == 0 ? lp - 0.5 * h : lp;
      const double gm = i == 0 ? lm : lm - 0.5 * h;
      const double phi0 = phi(lp, lm);
      const double flux_up = inv_metric(i, hp, hm) * (phi(pp, pm) - phi0);
      const double flux_dn = inv_metric(i, gp, gm) * (phi0 - phi(mp, mm));
      acc += (flux_up - flux_dn) / (h * h);
    }
    return acc;
  };

  const double coarse = apply(step);
  const double fine = apply(0.5 * step);
  const double refined = (4.0 * fine - coarse) / 3.0;
  const double drift = std::abs(fine - coarse);
  if (drift > std::max(1e-4 * std::abs(refined), 1e-8))
    throw ConvergenceError("laplace_beltrami: refinement failed to stabilize");
  return refined;
}

double laplace_beltrami(const ProcessSpec& spec, const AnsatzSpec& an,
                        double step) {
  check_ansatz(spec, an);
  return laplace_beltrami(
      spec, [&an](double lp, double lm) { return ansatz_value(an, lp, lm); },
      step);
}

namespace {

double grid_loglik(const std::vector<double>& samples, const DensityGrid& grid) {
  double acc = 0.0;
  for (double x : samples) acc += std::log(std::max(grid.density_at(x), 1e-300));
  return acc;
}

}  // namespace

double loglik_at(const std::vector<double>& samples, const ProcessSpec& templ,
                 double lp, double lm, int grid_n) {
  const ProcessSpec candidate = templ.with_decays(lp, lm);
  return grid_loglik(samples, density_grid(candidate, grid_n));
}

FitResult fit_mle(const std::vector<double>& samples, const ProcessSpec& templ,
                  bool penalized, const FitConfig& cfg) {
  if (samples.size() < 100)
    throw DomainError("fit_mle: needs at least 100 samples");

  int evals = 0;
  auto objective = [&](double zp, double zm) {
    const double lp = std::exp(zp);
    const double lm = std::exp(zm);
    ++evals;
    const ProcessSpec candidate = templ.with_decays(lp, lm);
    double obj = grid_loglik(samples, density_grid(candidate, cfg.grid_n));
    if (penalized) obj += std::log(jeffreys_prior(candidate));
    return obj;
  };

  const double zlo = std::log(cfg.lambda_lo);
  const double zhi = std::log(cfg.lambda_hi);
  auto clamp = [&](double z) { return std::clamp(z, zlo, zhi); };

  // coarse lattice around the template decays
  const double z0p = std::log(templ.lambda_plus());
  const double z0m = std::log(templ.lambda_minus());
  constexpr double kOffsets[5] = {-1.1, -0.55, 0.0, 0.55, 1.1};
  double best_zp = clamp(z0p), best_zm = clamp(z0m);
  double best = -std::numeric_limits<double>::infinity();
  for (double op : kOffsets) {
    for (double om : kOffsets) {
      const double zp = clamp(z0p + op);
      const double zm = clamp(z0m + om);
      const double v = objective(zp, zm);
      if (v > best) {
        best = v;
        best_zp = zp;
        best_zm = zm;
      }
    }
  }

  // compass refinement in log coordinates, step halving
  double h = 0.275;
  while (h > 5e-4) {
    if (evals >= cfg.max_evals)
      throw ConvergenceError("fit_mle: iteration cap reached");
    bool moved = false;
    const double dirs[4][2] = {{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}};
    for (const auto& d : dirs) {
      const double zp = clamp(best_zp + d[0]);
      const double zm = clamp(best_zm + d[1]);
      if (zp == best_zp && zm == best_zm) continue;
      const double v = objective(zp, zm);
      if (v > best) {
        best = v;
        best_zp = zp;
        best_zm = zm;
        moved = true;
        break;
      }
      if (evals >= cfg.max_evals)
        throw ConvergenceError("fit_mle: iteration cap reached");
    }
    if (!moved) h *= 0.5;
  }

  FitResult out;
  out.lambda_hat_plus = std::exp(best_zp);
  out.lambda_hat_minus = std::exp(best_zm);
  out.penalized = penalized;
  out.iterations = evals;
  out.loglik = loglik_at(samples, templ, out.lambda_hat_plus,
                         out.lambda_hat_minus, cfg.grid_n);
  return out;
}

BiasStudySummary bias_study(const ProcessSpec& truth,
                            const BiasStudyConfig& cfg) {
  if (cfg.n_seeds < 1) throw DomainError("bias_study: n_seeds < 1");
  const DensityGrid truth_grid = density_grid(truth, 4096);
  const double true_lp = truth.lambda_plus();
  const double true_lm = truth.lambda_minus();

  BiasStudySummary out;
  out.n_samples = cfg.n_samples;
  out.n_seeds = cfg.n_seeds;
  out.seed0 = cfg.seed0;

  struct Acc {
    double sum_p = 0, sum_abs_p = 0, sum_sq_p = 0, sum_m = 0, sum_abs_m = 0;
  };
  Acc plain, penal;

  for (int s = 0; s < cfg.n_seeds; ++s) {
    const std::vector<double> draws =
        sample(truth_grid, cfg.n_samples, cfg.seed0 + static_cast<std::uint64_t>(s));
    for (bool penalized : {false, true}) {
      const FitResult fit = fit_mle(draws, truth, penalized, cfg.fit);
      const double bp = fit.lambda_hat_plus - true_lp;
      const double bm = fit.lambda_hat_minus - true_lm;
      Acc& acc = penalized ? penal : plain;
      acc.sum_p += bp;
      acc.sum_abs_p += std::abs(bp);
      acc.sum_sq_p += bp * bp;
      acc.sum_m += bm;
      acc.sum_abs_m += std::abs(bm);
    }
  }

  auto summarize = [&](const Acc& acc) {
    BiasArmSummary s;
    const double n = cfg.n_seeds;
    s.mean_bias_plus = acc.sum_p / n;
    s.mean_abs_bias_plus = acc.sum_abs_p / n;
    s.rmse_plus = std::sqrt(acc.sum_sq_p / n);
    s.mean_bias_minus = acc.sum_m / n;
    s.mean_abs_bias_minus = acc.sum_abs_m / n;
    return s;
  };
  out.plain = summarize(plain);
  out.penalized = summarize(penal);
  return out;
}

}  // namespace tsgeo
