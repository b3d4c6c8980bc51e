#include "tsgeo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tsgeo {

namespace {

// G7-K15 nodes and weights (QUADPACK dqk15). xgk holds the positive Kronrod
// abscissae; even entries are also the embedded Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

bool worse(const Panel& x, const Panel& y) { return x.error < y.error; }

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  const double fc = f(center);
  fv[14] = fc;
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(center - half * kXgk[i]);
    fv[2 * i + 1] = f(center + half * kXgk[i]);
  }

  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::abs(resk);
  for (int i = 0; i < 7; ++i) {
    const double sum = fv[2 * i] + fv[2 * i + 1];
    resk += kWgk[i] * sum;
    resabs += kWgk[i] * (std::abs(fv[2 * i]) + std::abs(fv[2 * i + 1]));
    if (i % 2 == 1) resg += kWg[i / 2] * sum;
  }

  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv[2 * i] - mean) +
                         std::abs(fv[2 * i + 1] - mean));

  const double value = resk * half;
  resasc *= std::abs(half);
  resabs *= std::abs(half);

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  // round-off floor
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  return Panel{a, b, value, err};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) ||
      cfg.max_subdivisions < 1)
    throw DomainError("QuadratureConfig: tolerances and budget must be positive");
  if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");

  std::priority_queue<Panel, std::vector<Panel>, decltype(&worse)> active(
      &worse);
  active.push(evaluate_panel(f, a, b));
  int panels = 1;

  double total_value = active.top().value;
  double total_error = active.top().error;

  while (total_error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value))) {
    if (panels >= cfg.max_subdivisions)
      throw ConvergenceError("integrate_adaptive: subdivision budget exhausted");
    Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("integrate_adaptive: interval too small to bisect");
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++panels;
  }

  // deterministic reduction: sum in left-endpoint order
  std::vector<Panel> done;
  done.reserve(static_cast<size_t>(panels));
  while (!active.empty()) {
    done.push_back(active.top());
    active.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadResult out;
  for (const Panel& p : done) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

QuadResult integrate_tail(const std::function<double(double)>& f, double lo,
                          const QuadratureConfig& cfg) {
  auto mapped = [&f, lo](double u) {
    const double om = 1.0 - u;
    const double t = lo + u / om;
    const double v = f(t);
    if (v == 0.0) return 0.0;  // avoid 0 * huge Jacobian at the far end
    return v / (om * om);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, cfg);
}

}  // namespace tsgeo
