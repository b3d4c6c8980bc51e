#pragma once

#include <string>
#include <variant>

#include "tsgeo/errors.hpp"

namespace tsgeo {

enum class ModelKind { GTS, CTS, RDTS };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& tag);

/// Seven-parameter generalized family: separate tail indexes and scales for
/// the upper and lower tails, exponential tempering.
struct GtsParams {
  double a_plus;
  double a_minus;
  double c_plus;
  double c_minus;
  double lambda_plus;
  double lambda_minus;
  double m;
};

/// Five-parameter classical family: shared tail index and scale.
struct CtsParams {
  double a;
  double c;
  double lambda_plus;
  double lambda_minus;
  double m;

  /// Lossless view as the seven-parameter family with a+ = a- = a and
  /// C+ = C- = C. Every generalized-family computation on this view must
  /// reproduce the classical path bit for bit.
  GtsParams as_gts() const {
    return GtsParams{a, a, c, c, lambda_plus, lambda_minus, m};
  }
};

/// Same field layout as GtsParams, Gaussian tempering exp(-lambda x^2 / 2).
struct RdtsParams {
  double a_plus;
  double a_minus;
  double c_plus;
  double c_minus;
  double lambda_plus;
  double lambda_minus;
  double m;
};

/// A validated model: family tag, parameter record, and time horizon.
/// Immutable after construction; only the validate() factories build one.
class ProcessSpec {
 public:
  using Params = std::variant<GtsParams, CtsParams, RdtsParams>;

  ModelKind kind() const { return kind_; }
  double horizon_t() const { return horizon_t_; }
  const Params& params() const { return params_; }

  const GtsParams& gts() const;
  const CtsParams& cts() const;
  const RdtsParams& rdts() const;

  /// Parameter record reduced to the seven-field layout (classical specs go
  /// through CtsParams::as_gts). Tempering shape still follows kind().
  GtsParams reduced() const;

  double lambda_plus() const { return reduced_.lambda_plus; }
  double lambda_minus() const { return reduced_.lambda_minus; }
  double location() const { return reduced_.m; }

  /// Copy with both decay rates replaced (revalidated).
  ProcessSpec with_decays(double lambda_plus, double lambda_minus) const;

  friend ProcessSpec validate(const GtsParams& raw, double horizon_t);
  friend ProcessSpec validate(const CtsParams& raw, double horizon_t);
  friend ProcessSpec validate(const RdtsParams& raw, double horizon_t);

 private:
  ProcessSpec(ModelKind kind, Params params, double horizon_t);

  ModelKind kind_;
  Params params_;
  double horizon_t_;
  GtsParams reduced_;
};

ProcessSpec validate(const GtsParams& raw, double horizon_t);
ProcessSpec validate(const CtsParams& raw, double horizon_t);
ProcessSpec validate(const RdtsParams& raw, double horizon_t);

/// Two specs proven equivalent: same family, same horizon, shared stable
/// parameters, and drift locked by the equivalent-measure condition. Only
/// make_equivalent / check_equivalent construct one.
class MeasurePair {
 public:
  const ProcessSpec& p() const { return p_; }
  const ProcessSpec& q() const { return q_; }

  friend MeasurePair make_equivalent(const ProcessSpec& base,
                                     double new_lambda_plus,
                                     double new_lambda_minus);
  friend MeasurePair check_equivalent(const ProcessSpec& p,
                                      const ProcessSpec& q,
                                      double drift_tol);

 private:
  MeasurePair(ProcessSpec p, ProcessSpec q);
  ProcessSpec p_;
  ProcessSpec q_;
};

/// Drift-correction sum appearing in the equivalent-measure condition:
/// the value of m - m~ implied by the two decay pairs.
double emm_drift_shift(const ProcessSpec& base, double new_lambda_plus,
                       double new_lambda_minus);

/// Builds Q from `base` by replacing the decay rates and solving the
/// equivalent-measure drift condition for the new location.
MeasurePair make_equivalent(const ProcessSpec& base, double new_lambda_plus,
                            double new_lambda_minus);

/// Accepts (p, q) as a pair when every equivalent-measure equality holds:
/// shared parameters exactly, the drift relation within `drift_tol`
/// (absolute). Throws NotEquivalentError naming the first violation.
MeasurePair check_equivalent(const ProcessSpec& p, const ProcessSpec& q,
                             double drift_tol = 1e-12);

/// Validity report for the closed-form alpha-divergence of a pair.
struct FinitenessReport {
  bool valid;           // closed form well-defined at this alpha
  double mixed_plus;    // (1-alpha)/2 lambda+ + (1+alpha)/2 lambda~+
  double mixed_minus;
  bool kim_lee_plus;    // lambda+ < 2 lambda~+ (relevant at alpha = -1)
  bool kim_lee_minus;
};

FinitenessReport finiteness_report(const MeasurePair& pair, double alpha);

/// True iff the closed-form alpha-divergence is well-defined: always for
/// |alpha| <= 1, and for |alpha| > 1 iff both mixed decays stay positive.
bool kl_finiteness_domain(const MeasurePair& pair, double alpha);

}  // namespace tsgeo
