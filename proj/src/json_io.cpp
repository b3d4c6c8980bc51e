#include "tsgeo/json_io.hpp"

namespace tsgeo {

namespace {

double need(const Json& j, const char* key) {
  if (!j.contains(key))
    throw DomainError(std::string("missing field '") + key + "'");
  if (!j.at(key).is_number())
    throw DomainError(std::string("field '") + key + "' is not a number");
  return j.at(key).get<double>();
}

}  // namespace

Json to_json(const ProcessSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind());
  switch (spec.kind()) {
    case ModelKind::CTS: {
      const CtsParams& p = spec.cts();
      j["a"] = p.a;
      j["c"] = p.c;
      j["lambda_plus"] = p.lambda_plus;
      j["lambda_minus"] = p.lambda_minus;
      j["m"] = p.m;
      break;
    }
    case ModelKind::GTS:
    case ModelKind::RDTS: {
      const GtsParams p = spec.reduced();
      j["a_plus"] = p.a_plus;
      j["a_minus"] = p.a_minus;
      j["c_plus"] = p.c_plus;
      j["c_minus"] = p.c_minus;
      j["lambda_plus"] = p.lambda_plus;
      j["lambda_minus"] = p.lambda_minus;
      j["m"] = p.m;
      break;
    }
  }
  j["horizon_t"] = spec.horizon_t();
  return j;
}

ProcessSpec spec_from_json(const Json& j) {
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw DomainError("missing or non-string 'kind'");
  const ModelKind kind = model_kind_from_string(j.at("kind").get<std::string>());
  const double horizon = need(j, "horizon_t");
  switch (kind) {
    case ModelKind::CTS:
      return validate(CtsParams{need(j, "a"), need(j, "c"),
                                need(j, "lambda_plus"),
                                need(j, "lambda_minus"), need(j, "m")},
                      horizon);
    case ModelKind::GTS:
      return validate(GtsParams{need(j, "a_plus"), need(j, "a_minus"),
                                need(j, "c_plus"), need(j, "c_minus"),
                                need(j, "lambda_plus"),
                                need(j, "lambda_minus"), need(j, "m")},
                      horizon);
    case ModelKind::RDTS:
      return validate(RdtsParams{need(j, "a_plus"), need(j, "a_minus"),
                                 need(j, "c_plus"), need(j, "c_minus"),
                                 need(j, "lambda_plus"),
                                 need(j, "lambda_minus"), need(j, "m")},
                      horizon);
  }
  throw DomainError("unknown ModelKind");
}

Json to_json(const Metric2& g) {
  return Json{{"pp", g.pp}, {"pm", g.pm}, {"mm", g.mm}};
}

Json to_json(const Connection2& c) {
  return Json{{"ppp", c(0, 0, 0)}, {"ppm", c(0, 0, 1)}, {"pmp", c(0, 1, 0)},
              {"pmm", c(0, 1, 1)}, {"mmp", c(1, 1, 0)}, {"mmm", c(1, 1, 1)}};
}

Json to_json(const FitResult& r) {
  return Json{{"lambda_hat_plus", r.lambda_hat_plus},
              {"lambda_hat_minus", r.lambda_hat_minus},
              {"loglik", r.loglik},
              {"penalized", r.penalized},
              {"iterations", r.iterations}};
}

Json to_json(const BiasStudySummary& s) {
  auto arm = [](const BiasArmSummary& a) {
    return Json{{"mean_bias_plus", a.mean_bias_plus},
                {"mean_abs_bias_plus", a.mean_abs_bias_plus},
                {"rmse_plus", a.rmse_plus},
                {"mean_bias_minus", a.mean_bias_minus},
                {"mean_abs_bias_minus", a.mean_abs_bias_minus}};
  };
  return Json{{"n_samples", s.n_samples},
              {"n_seeds", s.n_seeds},
              {"seed0", s.seed0},
              {"plain", arm(s.plain)},
              {"penalized", arm(s.penalized)}};
}

}  // namespace tsgeo
