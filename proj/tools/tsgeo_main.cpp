// Command-line front end: every computation behind machine-readable JSON on
// stdout, human-readable indentation behind --pretty, CSV sidecars for grids.
// Exit codes: 0 ok, 2 domain error, 3 convergence error, 4 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tsgeo/charfn.hpp"
#include "tsgeo/divergence.hpp"
#include "tsgeo/geometry.hpp"
#include "tsgeo/inference.hpp"
#include "tsgeo/json_io.hpp"
#include "tsgeo/version.hpp"

namespace {

using tsgeo::Json;

struct ModelOptions {
  std::string model = "gts";
  double a = 0.5, c = 1.0;                      // classical record
  double ap = 0.5, am = 0.5, cp = 1.0, cm = 1.0;  // seven-parameter records
  double lp = 1.0, lm = 1.0;
  double m = 0.0;
  double t = 1.0;
};

void add_model_flags(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("--model", o.model, "model family: gts, cts, or rdts")
      ->check(CLI::IsMember({"gts", "cts", "rdts"}));
  cmd->add_option("--a", o.a, "tail index (cts)");
  cmd->add_option("--c", o.c, "scale (cts)");
  cmd->add_option("--ap", o.ap, "upper tail index (gts/rdts)");
  cmd->add_option("--am", o.am, "lower tail index (gts/rdts)");
  cmd->add_option("--cp", o.cp, "upper scale (gts/rdts)");
  cmd->add_option("--cm", o.cm, "lower scale (gts/rdts)");
  cmd->add_option("--lp", o.lp, "upper decay rate");
  cmd->add_option("--lm", o.lm, "lower decay rate");
  cmd->add_option("--m", o.m, "location");
  cmd->add_option("--t", o.t, "time horizon");
}

tsgeo::ProcessSpec build_spec(const ModelOptions& o) {
  if (o.model == "cts")
    return tsgeo::validate(tsgeo::CtsParams{o.a, o.c, o.lp, o.lm, o.m}, o.t);
  if (o.model == "rdts")
    return tsgeo::validate(
        tsgeo::RdtsParams{o.ap, o.am, o.cp, o.cm, o.lp, o.lm, o.m}, o.t);
  return tsgeo::validate(
      tsgeo::GtsParams{o.ap, o.am, o.cp, o.cm, o.lp, o.lm, o.m}, o.t);
}

tsgeo::QuadratureConfig quad_config_from_env() {
  tsgeo::QuadratureConfig cfg;
  if (const char* s = std::getenv("TSGEO_QUAD_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && *end == '\0' && v > 0.0) {
      cfg.rel_tol = v;
      cfg.abs_tol = v * 1e-2;
    } else {
      std::cerr << "tsgeo: ignoring invalid TSGEO_QUAD_TOL\n";
    }
  }
  return cfg;
}

Json make_manifest(const std::string& command, Json parameters,
                   std::optional<std::uint64_t> seed = std::nullopt) {
  Json m;
  m["command"] = command;
  m["version"] = tsgeo::kVersion;
  m["parameters"] = std::move(parameters);
  if (seed) m["seed"] = *seed;
  return m;
}

bool g_pretty = false;

void emit(const Json& manifest, const Json& result) {
  Json envelope;
  envelope["manifest"] = manifest;
  envelope["result"] = result;
  if (g_pretty)
    std::cout << envelope.dump(2) << '\n';
  else
    std::cout << envelope.dump() << '\n';
}

// ---- subcommand actions ----------------------------------------------------

struct DivergenceOptions {
  ModelOptions model;
  double alpha = -1.0;
  std::optional<double> new_lp, new_lm;
  std::optional<double> q_lp, q_lm, q_m;
  bool oracle = false;
  double tol = 1e-8;
};

int run_divergence(const DivergenceOptions& o) {
  const tsgeo::ProcessSpec p = build_spec(o.model);
  const tsgeo::MeasurePair pair = [&] {
    if (o.q_lp || o.q_lm) {
      if (!(o.q_lp && o.q_lm && o.q_m))
        throw tsgeo::DomainError(
            "explicit Q needs --q-lp, --q-lm, and --q-m together");
      ModelOptions qo = o.model;
      qo.lp = *o.q_lp;
      qo.lm = *o.q_lm;
      qo.m = *o.q_m;
      return tsgeo::check_equivalent(p, build_spec(qo));
    }
    const double nlp = o.new_lp.value_or(o.model.lp);
    const double nlm = o.new_lm.value_or(o.model.lm);
    return tsgeo::make_equivalent(p, nlp, nlm);
  }();

  const double value = tsgeo::alpha_divergence(pair, o.alpha);

  Json result;
  result["model"] = tsgeo::to_string(p.kind());
  result["alpha"] = o.alpha;
  result["value"] = value;
  const tsgeo::FinitenessReport rep = tsgeo::finiteness_report(pair, o.alpha);
  result["domain"] = Json{{"valid", rep.valid},
                          {"mixed_plus", rep.mixed_plus},
                          {"mixed_minus", rep.mixed_minus}};
  if (o.alpha == -1.0)
    result["kim_lee"] =
        Json{{"plus", rep.kim_lee_plus}, {"minus", rep.kim_lee_minus}};

  if (o.oracle) {
    const tsgeo::QuadratureConfig cfg = quad_config_from_env();
    const tsgeo::QuadResult quad =
        tsgeo::alpha_divergence_quadrature(pair, o.alpha, cfg);
    const double gap = std::abs(value - quad.value);
    const bool pass = gap <= std::max(o.tol * std::abs(value), 1e-12);
    result["oracle"] = Json{{"value", quad.value},
                            {"error_bound", quad.error},
                            {"abs_gap", gap},
                            {"tol", o.tol},
                            {"pass", pass}};
  }

  Json params = tsgeo::to_json(p);
  params["alpha"] = o.alpha;
  params["q_lambda_plus"] = pair.q().lambda_plus();
  params["q_lambda_minus"] = pair.q().lambda_minus();
  params["q_m"] = pair.q().location();
  emit(make_manifest("divergence", params), result);
  return 0;
}

struct GeometryOptions {
  ModelOptions model;
  double alpha = 0.0;
  bool oracle = false;
  double tol = 1e-5;
};

int run_geometry(const GeometryOptions& o) {
  const tsgeo::ProcessSpec spec = build_spec(o.model);
  const tsgeo::Metric2 g = tsgeo::fisher_metric(spec);
  const tsgeo::Connection2 lc = tsgeo::levi_civita(spec);
  const tsgeo::Connection2 ac = tsgeo::alpha_connection(spec, o.alpha);

  Json result;
  result["model"] = tsgeo::to_string(spec.kind());
  result["alpha"] = o.alpha;
  result["metric"] = tsgeo::to_json(g);
  result["levi_civita"] = tsgeo::to_json(lc);
  result["alpha_connection"] = tsgeo::to_json(ac);
  result["jeffreys_prior"] = tsgeo::jeffreys_prior(spec);

  if (o.oracle) {
    const tsgeo::QuadratureConfig cfg = quad_config_from_env();
    const tsgeo::Metric2 g_fd = tsgeo::metric_from_divergence(spec, o.alpha);
    const auto [g_quad, c_quad] = tsgeo::geometry_quadrature(spec, o.alpha, cfg);
    auto rel_gap = [](double x, double y) {
      return std::abs(x - y) / std::max(std::abs(x), 1e-300);
    };
    const double max_metric_gap =
        std::max({rel_gap(g.pp, g_fd.pp), rel_gap(g.mm, g_fd.mm),
                  rel_gap(g.pp, g_quad.pp), rel_gap(g.mm, g_quad.mm)});
    const double max_conn_gap = std::max(rel_gap(ac(0, 0, 0), c_quad(0, 0, 0)),
                                         rel_gap(ac(1, 1, 1), c_quad(1, 1, 1)));
    const double off_diag =
        std::max(std::abs(g_fd.pm), std::abs(g_quad.pm));
    const bool pass = max_metric_gap <= o.tol && off_diag < 1e-7;
    result["oracle"] = Json{{"metric_fd", tsgeo::to_json(g_fd)},
                            {"metric_quadrature", tsgeo::to_json(g_quad)},
                            {"connection_quadrature", tsgeo::to_json(c_quad)},
                            {"max_metric_rel_gap", max_metric_gap},
                            {"max_connection_rel_gap", max_conn_gap},
                            {"max_off_diagonal", off_diag},
                            {"tol", o.tol},
                            {"pass", pass}};
  }

  Json params = tsgeo::to_json(spec);
  params["alpha"] = o.alpha;
  emit(make_manifest("geometry", params), result);
  return 0;
}

int run_prior(const ModelOptions& o) {
  const tsgeo::ProcessSpec spec = build_spec(o);
  const double prior = tsgeo::jeffreys_prior(spec);
  Json result;
  result["model"] = tsgeo::to_string(spec.kind());
  result["jeffreys_prior"] = prior;
  result["log_jeffreys_prior"] = std::log(prior);
  result["metric"] = tsgeo::to_json(tsgeo::fisher_metric(spec));
  emit(make_manifest("prior", tsgeo::to_json(spec)), result);
  return 0;
}

struct AnsatzOptions {
  ModelOptions model;
  std::string kind = "phi1";
  double k = 0.0, l = 0.0, c1 = 1.0, c2 = 1.0;
  int grid_n = 9;
  double lambda_min = 0.5, lambda_max = 4.0;
  double tol = 1e-10;
  std::string csv_path;
};

int run_ansatz_check(const AnsatzOptions& o) {
  const tsgeo::ProcessSpec spec = build_spec(o.model);
  tsgeo::AnsatzSpec an;
  an.kind = tsgeo::ansatz_kind_from_string(o.kind);
  an.k = o.k;
  an.l = o.l;
  an.c1 = o.c1;
  an.c2 = o.c2;
  tsgeo::check_ansatz(spec, an);
  if (o.grid_n < 2) throw tsgeo::DomainError("ansatz-check: grid_n < 2");

  std::ostringstream csv;
  csv << "lambda_plus,lambda_minus,delta_phi\n";
  csv.precision(17);
  double max_delta = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < o.grid_n; ++i) {
    for (int j = 0; j < o.grid_n; ++j) {
      const double gp = o.lambda_min + i * (o.lambda_max - o.lambda_min) /
                                           (o.grid_n - 1);
      const double gm = o.lambda_min + j * (o.lambda_max - o.lambda_min) /
                                           (o.grid_n - 1);
      const double d = tsgeo::laplace_beltrami(spec.with_decays(gp, gm), an);
      max_delta = std::max(max_delta, d);
      csv << gp << ',' << gm << ',' << d << '\n';
    }
  }
  if (!o.csv_path.empty()) {
    std::ofstream out(o.csv_path);
    if (!out) throw std::ios_base::failure("cannot open " + o.csv_path);
    out << csv.str();
  }

  Json result;
  result["kind"] = o.kind;
  result["k"] = o.k;
  result["l"] = o.l;
  result["c1"] = o.c1;
  result["c2"] = o.c2;
  result["grid"] = Json{{"n", o.grid_n},
                        {"lambda_min", o.lambda_min},
                        {"lambda_max", o.lambda_max}};
  result["max_delta_phi"] = max_delta;
  result["tol"] = o.tol;
  result["pass"] = max_delta <= o.tol;
  if (!o.csv_path.empty()) result["csv"] = o.csv_path;

  Json params = tsgeo::to_json(spec);
  params["ansatz"] = o.kind;
  emit(make_manifest("ansatz-check", params), result);
  return 0;
}

struct FitOptions {
  ModelOptions model;
  std::string data_path;
  int synthetic_n = 0;
  std::uint64_t seed = 1;
  bool penalized = false;
  int grid_n = 2048;
  std::string density_csv;
};

int run_fit(const FitOptions& o) {
  const tsgeo::ProcessSpec templ = build_spec(o.model);

  std::vector<double> samples;
  if (!o.data_path.empty()) {
    std::ifstream in(o.data_path);
    if (!in) throw std::ios_base::failure("cannot open " + o.data_path);
    double v;
    while (in >> v) samples.push_back(v);
    if (!in.eof()) throw std::ios_base::failure("malformed sample file");
  } else if (o.synthetic_n > 0) {
    samples = tsgeo::sample(templ, o.synthetic_n, o.seed);
  } else {
    throw tsgeo::DomainError("fit: provide --data FILE or --synthetic N");
  }

  tsgeo::FitConfig cfg;
  cfg.grid_n = o.grid_n;
  const tsgeo::FitResult fit = tsgeo::fit_mle(samples, templ, o.penalized, cfg);

  if (!o.density_csv.empty()) {
    const tsgeo::ProcessSpec fitted =
        templ.with_decays(fit.lambda_hat_plus, fit.lambda_hat_minus);
    std::ofstream out(o.density_csv);
    if (!out) throw std::ios_base::failure("cannot open " + o.density_csv);
    tsgeo::write_csv(tsgeo::density_grid(fitted), out);
  }

  Json result = tsgeo::to_json(fit);
  result["n_samples"] = samples.size();
  if (!o.density_csv.empty()) result["density_csv"] = o.density_csv;

  Json params = tsgeo::to_json(templ);
  params["penalized"] = o.penalized;
  if (!o.data_path.empty()) params["data"] = o.data_path;
  if (o.synthetic_n > 0) params["synthetic_n"] = o.synthetic_n;
  emit(make_manifest("fit", params,
                     o.synthetic_n > 0 ? std::optional(o.seed) : std::nullopt),
       result);
  return 0;
}

struct BiasOptions {
  ModelOptions model;
  int n = 200;
  int seeds = 200;
  std::uint64_t seed0 = 42;
};

int run_bias_study(const BiasOptions& o) {
  const tsgeo::ProcessSpec truth = build_spec(o.model);
  tsgeo::BiasStudyConfig cfg;
  cfg.n_samples = o.n;
  cfg.n_seeds = o.seeds;
  cfg.seed0 = o.seed0;
  const tsgeo::BiasStudySummary summary = tsgeo::bias_study(truth, cfg);

  Json result = tsgeo::to_json(summary);
  result["true_lambda_plus"] = truth.lambda_plus();
  result["true_lambda_minus"] = truth.lambda_minus();
  result["abs_bias_improved"] =
      summary.penalized.mean_abs_bias_plus <= summary.plain.mean_abs_bias_plus;
  result["signed_bias_improved"] = std::abs(summary.penalized.mean_bias_plus) <=
                                   std::abs(summary.plain.mean_bias_plus);

  Json params = tsgeo::to_json(truth);
  params["n"] = o.n;
  params["seeds"] = o.seeds;
  emit(make_manifest("bias-study", params, o.seed0), result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information geometry of tempered stable processes"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent the JSON output");

  DivergenceOptions div;
  CLI::App* cmd_div = app.add_subcommand(
      "divergence", "closed-form alpha-divergence of an equivalent pair");
  add_model_flags(cmd_div, div.model);
  cmd_div->add_option("--alpha", div.alpha, "divergence order");
  auto opt_nlp = cmd_div->add_option("--new-lp", "Q upper decay");
  auto opt_nlm = cmd_div->add_option("--new-lm", "Q lower decay");
  auto opt_qlp = cmd_div->add_option("--q-lp", "explicit Q upper decay");
  auto opt_qlm = cmd_div->add_option("--q-lm", "explicit Q lower decay");
  auto opt_qm = cmd_div->add_option("--q-m", "explicit Q location");
  cmd_div->add_flag("--oracle", div.oracle, "also run the quadrature oracle");
  cmd_div->add_option("--tol", div.tol, "relative oracle tolerance");

  GeometryOptions geo;
  CLI::App* cmd_geo = app.add_subcommand(
      "geometry", "Fisher metric and connections of the decay chart");
  add_model_flags(cmd_geo, geo.model);
  cmd_geo->add_option("--alpha", geo.alpha, "connection order");
  cmd_geo->add_flag("--oracle", geo.oracle, "also run the numerical oracles");
  cmd_geo->add_option("--tol", geo.tol, "relative oracle tolerance");

  ModelOptions prior_model;
  CLI::App* cmd_prior = app.add_subcommand("prior", "Jeffreys prior value");
  add_model_flags(cmd_prior, prior_model);

  AnsatzOptions ans;
  CLI::App* cmd_ans = app.add_subcommand(
      "ansatz-check", "shrinkage ansatz superharmonicity over a decay grid");
  add_model_flags(cmd_ans, ans.model);
  cmd_ans->add_option("--kind", ans.kind, "phi1, phi2, phi3, or phi4")
      ->check(CLI::IsMember({"phi1", "phi2", "phi3", "phi4"}));
  cmd_ans->add_option("--k", ans.k, "lambda+ exponent");
  cmd_ans->add_option("--l", ans.l, "lambda- exponent");
  cmd_ans->add_option("--c1", ans.c1, "phi3 weight");
  cmd_ans->add_option("--c2", ans.c2, "phi3 weight");
  cmd_ans->add_option("--grid-n", ans.grid_n, "grid points per axis");
  cmd_ans->add_option("--lambda-min", ans.lambda_min, "grid lower bound");
  cmd_ans->add_option("--lambda-max", ans.lambda_max, "grid upper bound");
  cmd_ans->add_option("--tol", ans.tol, "pass threshold on max delta-phi");
  cmd_ans->add_option("--csv", ans.csv_path, "write the grid as CSV");

  FitOptions fit;
  CLI::App* cmd_fit = app.add_subcommand(
      "fit", "maximum-likelihood decay estimates from samples");
  add_model_flags(cmd_fit, fit.model);
  cmd_fit->add_option("--data", fit.data_path, "sample file, one value per line");
  cmd_fit->add_option("--synthetic", fit.synthetic_n,
                      "draw this many samples from the template instead");
  cmd_fit->add_option("--seed", fit.seed, "seed for --synthetic");
  cmd_fit->add_flag("--penalized", fit.penalized, "add the Jeffreys penalty");
  cmd_fit->add_option("--grid-n", fit.grid_n, "inversion grid size");
  cmd_fit->add_option("--density-csv", fit.density_csv,
                      "write the fitted density grid as CSV");

  BiasOptions bias;
  CLI::App* cmd_bias = app.add_subcommand(
      "bias-study", "Monte Carlo bias comparison of plain vs penalized fits");
  add_model_flags(cmd_bias, bias.model);
  cmd_bias->add_option("--n", bias.n, "samples per seed");
  cmd_bias->add_option("--seeds", bias.seeds, "number of seeds");
  cmd_bias->add_option("--seed0", bias.seed0, "first seed");

  try {
    app.parse(argc, argv);

    const auto started = std::chrono::steady_clock::now();
    int rc = 0;
    if (*cmd_div) {
      if (*opt_nlp) div.new_lp = opt_nlp->as<double>();
      if (*opt_nlm) div.new_lm = opt_nlm->as<double>();
      if (*opt_qlp) div.q_lp = opt_qlp->as<double>();
      if (*opt_qlm) div.q_lm = opt_qlm->as<double>();
      if (*opt_qm) div.q_m = opt_qm->as<double>();
      rc = run_divergence(div);
    } else if (*cmd_geo) {
      rc = run_geometry(geo);
    } else if (*cmd_prior) {
      rc = run_prior(prior_model);
    } else if (*cmd_ans) {
      rc = run_ansatz_check(ans);
    } else if (*cmd_fit) {
      rc = run_fit(fit);
    } else if (*cmd_bias) {
      rc = run_bias_study(bias);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "tsgeo: completed in " << elapsed.count() << " ms\n";
    return rc;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tsgeo::ConvergenceError& e) {
    std::cerr << "tsgeo: convergence error: " << e.what() << '\n';
    return 3;
  } catch (const tsgeo::DomainError& e) {
    std::cerr << "tsgeo: domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "tsgeo: i/o error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "tsgeo: error: " << e.what() << '\n';
    return 1;
  }
}
