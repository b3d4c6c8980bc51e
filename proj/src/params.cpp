#include "tsgeo/params.hpp"

#include <cmath>
#include <sstream>

#include "tsgeo/special.hpp"

namespace tsgeo {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::GTS: return "GTS";
    case ModelKind::CTS: return "CTS";
    case ModelKind::RDTS: return "RDTS";
  }
  throw DomainError("unknown ModelKind");
}

ModelKind model_kind_from_string(const std::string& tag) {
  if (tag == "GTS") return ModelKind::GTS;
  if (tag == "CTS") return ModelKind::CTS;
  if (tag == "RDTS") return ModelKind::RDTS;
  throw DomainError("unknown model tag '" + tag + "'");
}

namespace {

void check_index(double a, const char* name) {
  if (!std::isfinite(a)) throw DomainError(std::string(name) + " non-finite");
  if (a == 1.0) throw DomainError(std::string(name) + " = 1 excluded");
  if (!(a > 0.0 && a < 2.0))
    throw DomainError(std::string(name) + " outside (0,2)");
}

void check_positive(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " non-finite");
  if (!(v > 0.0)) throw DomainError(std::string(name) + " <= 0");
}

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " non-finite");
}

void check_seven(const GtsParams& r, const char* ap, const char* am) {
  check_index(r.a_plus, ap);
  check_index(r.a_minus, am);
  check_positive(r.c_plus, "c_plus");
  check_positive(r.c_minus, "c_minus");
  check_positive(r.lambda_plus, "lambda_plus");
  check_positive(r.lambda_minus, "lambda_minus");
  check_finite(r.m, "m");
}

}  // namespace

ProcessSpec::ProcessSpec(ModelKind kind, Params params, double horizon_t)
    : kind_(kind), params_(std::move(params)), horizon_t_(horizon_t) {
  reduced_ = std::visit(
      [](const auto& p) -> GtsParams {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CtsParams>) {
          return p.as_gts();
        } else {
          return GtsParams{p.a_plus,      p.a_minus,     p.c_plus, p.c_minus,
                           p.lambda_plus, p.lambda_minus, p.m};
        }
      },
      params_);
}

const GtsParams& ProcessSpec::gts() const {
  if (kind_ != ModelKind::GTS) throw DomainError("spec is not GTS");
  return std::get<GtsParams>(params_);
}

const CtsParams& ProcessSpec::cts() const {
  if (kind_ != ModelKind::CTS) throw DomainError("spec is not CTS");
  return std::get<CtsParams>(params_);
}

const RdtsParams& ProcessSpec::rdts() const {
  if (kind_ != ModelKind::RDTS) throw DomainError("spec is not RDTS");
  return std::get<RdtsParams>(params_);
}

GtsParams ProcessSpec::reduced() const { return reduced_; }

ProcessSpec ProcessSpec::with_decays(double lambda_plus,
                                     double lambda_minus) const {
  switch (kind_) {
    case ModelKind::GTS: {
      GtsParams p = gts();
      p.lambda_plus = lambda_plus;
      p.lambda_minus = lambda_minus;
      return validate(p, horizon_t_);
    }
    case ModelKind::CTS: {
      CtsParams p = cts();
      p.lambda_plus = lambda_plus;
      p.lambda_minus = lambda_minus;
      return validate(p, horizon_t_);
    }
    case ModelKind::RDTS: {
      RdtsParams p = rdts();
      p.lambda_plus = lambda_plus;
      p.lambda_minus = lambda_minus;
      return validate(p, horizon_t_);
    }
  }
  throw DomainError("unknown ModelKind");
}

ProcessSpec validate(const GtsParams& raw, double horizon_t) {
  check_seven(raw, "a_plus", "a_minus");
  check_positive(horizon_t, "horizon_t");
  return ProcessSpec(ModelKind::GTS, raw, horizon_t);
}

ProcessSpec validate(const CtsParams& raw, double horizon_t) {
  check_index(raw.a, "a");
  check_positive(raw.c, "c");
  check_positive(raw.lambda_plus, "lambda_plus");
  check_positive(raw.lambda_minus, "lambda_minus");
  check_finite(raw.m, "m");
  check_positive(horizon_t, "horizon_t");
  return ProcessSpec(ModelKind::CTS, raw, horizon_t);
}

ProcessSpec validate(const RdtsParams& raw, double horizon_t) {
  check_seven(GtsParams{raw.a_plus, raw.a_minus, raw.c_plus, raw.c_minus,
                        raw.lambda_plus, raw.lambda_minus, raw.m},
              "a_plus", "a_minus");
  check_positive(horizon_t, "horizon_t");
  return ProcessSpec(ModelKind::RDTS, raw, horizon_t);
}

MeasurePair::MeasurePair(ProcessSpec p, ProcessSpec q)
    : p_(std::move(p)), q_(std::move(q)) {}

namespace {

// One tail's contribution to the drift condition: for the exponential
// families K Gamma(1-a) (lambda^{a-1} - lt^{a-1}); for the Gaussian family
// the prefactor becomes 2^{-(1+a)/2} K Gamma((1-a)/2).
double drift_term(ModelKind kind, double a, double c, double lam, double lt) {
  if (kind == ModelKind::RDTS) {
    const double pre = std::pow(2.0, -(1.0 + a) / 2.0) * c *
                       gamma_real((1.0 - a) / 2.0);
    return pre * (std::pow(lam, a - 1.0) - std::pow(lt, a - 1.0));
  }
  return c * gamma_real(1.0 - a) *
         (std::pow(lam, a - 1.0) - std::pow(lt, a - 1.0));
}

}  // namespace

double emm_drift_shift(const ProcessSpec& base, double new_lambda_plus,
                       double new_lambda_minus) {
  const GtsParams r = base.reduced();
  const double plus = drift_term(base.kind(), r.a_plus, r.c_plus,
                                 r.lambda_plus, new_lambda_plus);
  const double minus = drift_term(base.kind(), r.a_minus, r.c_minus,
                                  r.lambda_minus, new_lambda_minus);
  return plus - minus;
}

MeasurePair make_equivalent(const ProcessSpec& base, double new_lambda_plus,
                            double new_lambda_minus) {
  if (!(new_lambda_plus > 0.0) || !std::isfinite(new_lambda_plus))
    throw DomainError("new_lambda_plus <= 0");
  if (!(new_lambda_minus > 0.0) || !std::isfinite(new_lambda_minus))
    throw DomainError("new_lambda_minus <= 0");

  // m = m~ + shift, so the new measure keeps m~ = m - shift.
  const double m_tilde =
      base.location() - emm_drift_shift(base, new_lambda_plus, new_lambda_minus);

  ProcessSpec q = [&] {
    switch (base.kind()) {
      case ModelKind::GTS: {
        GtsParams p = base.gts();
        p.lambda_plus = new_lambda_plus;
        p.lambda_minus = new_lambda_minus;
        p.m = m_tilde;
        return validate(p, base.horizon_t());
      }
      case ModelKind::CTS: {
        CtsParams p = base.cts();
        p.lambda_plus = new_lambda_plus;
        p.lambda_minus = new_lambda_minus;
        p.m = m_tilde;
        return validate(p, base.horizon_t());
      }
      case ModelKind::RDTS: {
        RdtsParams p = base.rdts();
        p.lambda_plus = new_lambda_plus;
        p.lambda_minus = new_lambda_minus;
        p.m = m_tilde;
        return validate(p, base.horizon_t());
      }
    }
    throw DomainError("unknown ModelKind");
  }();

  return MeasurePair(base, std::move(q));
}

MeasurePair check_equivalent(const ProcessSpec& p, const ProcessSpec& q,
                             double drift_tol) {
  if (p.kind() != q.kind())
    throw NotEquivalentError("model kinds differ: " + to_string(p.kind()) +
                             " vs " + to_string(q.kind()));
  if (p.horizon_t() != q.horizon_t())
    throw NotEquivalentError("horizons differ");

  const GtsParams a = p.reduced();
  const GtsParams b = q.reduced();
  auto require_equal = [](double x, double y, const char* name) {
    if (x != y)
      throw NotEquivalentError(std::string("shared parameter mismatch: ") +
                               name);
  };
  require_equal(a.c_plus, b.c_plus, "c_plus");
  require_equal(a.c_minus, b.c_minus, "c_minus");
  require_equal(a.a_plus, b.a_plus, "a_plus");
  require_equal(a.a_minus, b.a_minus, "a_minus");

  const double expected_m_tilde =
      a.m - emm_drift_shift(p, b.lambda_plus, b.lambda_minus);
  if (!(std::abs(b.m - expected_m_tilde) <= drift_tol)) {
    std::ostringstream os;
    os << "drift relation violated: m~ = " << b.m << ", expected "
       << expected_m_tilde;
    throw NotEquivalentError(os.str());
  }
  return MeasurePair(p, q);
}

FinitenessReport finiteness_report(const MeasurePair& pair, double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("alpha non-finite");
  const GtsParams p = pair.p().reduced();
  const GtsParams q = pair.q().reduced();
  const double wm = (1.0 - alpha) / 2.0;
  const double wp = (1.0 + alpha) / 2.0;

  FinitenessReport rep;
  rep.mixed_plus = wm * p.lambda_plus + wp * q.lambda_plus;
  rep.mixed_minus = wm * p.lambda_minus + wp * q.lambda_minus;
  rep.kim_lee_plus = p.lambda_plus < 2.0 * q.lambda_plus;
  rep.kim_lee_minus = p.lambda_minus < 2.0 * q.lambda_minus;
  rep.valid = std::abs(alpha) <= 1.0
                  ? true
                  : (rep.mixed_plus > 0.0 && rep.mixed_minus > 0.0);
  return rep;
}

bool kl_finiteness_domain(const MeasurePair& pair, double alpha) {
  return finiteness_report(pair, alpha).valid;
}

}  // namespace tsgeo
