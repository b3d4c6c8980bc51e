#pragma once

#include <functional>
#include <utility>

#include "tsgeo/params.hpp"
#include "tsgeo/quadrature.hpp"

namespace tsgeo {

/// 2x2 metric tensor in the chart (lambda_plus, lambda_minus). The tail
/// index, scale, location, and horizon are frozen constants of the chart.
struct Metric2 {
  double pp = 0.0;
  double mm = 0.0;
  double pm = 0.0;  // symmetric off-diagonal

  double det() const { return pp * mm - pm * pm; }
};

/// Lowered-index connection coefficients Gamma_{ij,k}, symmetric in (i, j).
/// Index 0 is lambda_plus, index 1 lambda_minus.
struct Connection2 {
  double coeff[2][2][2] = {};

  double operator()(int i, int j, int k) const { return coeff[i][j][k]; }
  void set(int i, int j, int k, double v) {
    coeff[i][j][k] = v;
    coeff[j][i][k] = v;
  }
};

/// Fisher information matrix of the decay chart:
/// diag(T k+ Gamma(2-b+)/lambda+^{2-b+}, T k- Gamma(2-b-)/lambda-^{2-b-})
/// with (b, k) the per-family kernel reduction. Off-diagonals are exactly 0.
Metric2 fisher_metric(const ProcessSpec& spec);

/// Levi-Civita connection: only Gamma_{++,+} and Gamma_{--,-} survive,
/// each -1/2 T k Gamma(3-b)/lambda^{3-b}.
Connection2 levi_civita(const ProcessSpec& spec);

/// alpha-connection: (1-alpha) times the Levi-Civita coefficients.
/// Returns levi_civita bitwise at alpha = 0 and the zero connection at
/// alpha = 1.
Connection2 alpha_connection(const ProcessSpec& spec, double alpha);

/// Builds the equivalent pair with P at (lp, lm) and Q at (lpt, lmt),
/// drift solved by the equivalent-measure condition.
using PairFactory =
    std::function<MeasurePair(double lp, double lm, double lpt, double lmt)>;

PairFactory emm_pair_factory(const ProcessSpec& spec);

/// Numerical metric from the divergence: g_ij = -d_i d~_j D at coinciding
/// decays, by central second differences with relative step `step` and one
/// Richardson refinement. alpha only selects which divergence is
/// differentiated; the result must not depend on it.
///
/// Throws ConvergenceError when two Richardson levels fail to stabilize.
Metric2 metric_from_divergence(const PairFactory& factory,
                               const ProcessSpec& spec, double alpha,
                               double step = 1e-4);

Metric2 metric_from_divergence(const ProcessSpec& spec, double alpha,
                               double step = 1e-4);

/// Metric and alpha-connection by adaptive quadrature of the score-product
/// and score-triple integrals against the jump measure. The same integrals
/// are evaluated a second time through the tempering-function scores, and
/// the two routes must agree to combined quadrature tolerance.
std::pair<Metric2, Connection2> geometry_quadrature(
    const ProcessSpec& spec, double alpha, const QuadratureConfig& cfg = {});

}  // namespace tsgeo
