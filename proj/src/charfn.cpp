#include "tsgeo/charfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tsgeo/special.hpp"

namespace tsgeo {

namespace {

using std::numbers::pi;

ComplexValue cpow(ComplexValue base, double p) { return std::pow(base, p); }

// Exponential-family exponent: drift plus the two tail terms built from
// principal-branch powers. The lambda^a reference values go through the same
// complex power routine so the exponent is exactly zero at u = 0.
ComplexValue gts_exponent(const GtsParams& r, double u) {
  const ComplexValue iu(0.0, u);
  const double drift_p = r.c_plus * gamma_real(1.0 - r.a_plus) *
                         std::pow(r.lambda_plus, r.a_plus - 1.0);
  const double drift_m = r.c_minus * gamma_real(1.0 - r.a_minus) *
                         std::pow(r.lambda_minus, r.a_minus - 1.0);
  const ComplexValue plus =
      r.c_plus * gamma_real(-r.a_plus) *
      (cpow(ComplexValue(r.lambda_plus, 0.0) - iu, r.a_plus) -
       cpow(ComplexValue(r.lambda_plus, 0.0), r.a_plus));
  const ComplexValue minus =
      r.c_minus * gamma_real(-r.a_minus) *
      (cpow(ComplexValue(r.lambda_minus, 0.0) + iu, r.a_minus) -
       cpow(ComplexValue(r.lambda_minus, 0.0), r.a_minus));
  return iu * r.m - iu * (drift_p - drift_m) + plus + minus;
}

// Auxiliary function of the Gaussian-tempered characteristic exponent,
// evaluated at x = +-iu so the hypergeometric argument is real and <= 0.
ComplexValue g_function(ComplexValue x, double a, double lambda) {
  const ComplexValue z = x * x / (2.0 * lambda * lambda);
  const ComplexValue m1 = kummer_m(-a / 2.0, 0.5, z);
  const ComplexValue m2 = kummer_m((1.0 - a) / 2.0, 1.5, z);
  const double pre1 =
      std::pow(2.0, -1.0 - a / 2.0) * std::pow(lambda, a) * gamma_real(-a / 2.0);
  const double pre2 = std::pow(2.0, -0.5 - a / 2.0) *
                      std::pow(lambda, a - 1.0) *
                      gamma_real((1.0 - a) / 2.0);
  return pre1 * (m1 - 1.0) + pre2 * x * (m2 - 1.0);
}

ComplexValue rdts_exponent(const RdtsParams& r, double u) {
  const ComplexValue iu(0.0, u);
  return iu * r.m + r.c_plus * g_function(iu, r.a_plus, r.lambda_plus) +
         r.c_minus * g_function(-iu, r.a_minus, r.lambda_minus);
}

// In-place iterative radix-2 transform, sign -1 (forward DFT).
void fft(std::vector<ComplexValue>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * pi / static_cast<double>(len);
    const ComplexValue wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      ComplexValue w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const ComplexValue x = a[i + k];
        const ComplexValue y = a[i + k + len / 2] * w;
        a[i + k] = x + y;
        a[i + k + len / 2] = x - y;
        w *= wl;
      }
    }
  }
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

ComplexValue cf_exponent(const ProcessSpec& spec, double u) {
  if (!std::isfinite(u)) throw DomainError("characteristic function: u non-finite");
  if (spec.kind() == ModelKind::RDTS) return rdts_exponent(spec.rdts(), u);
  return gts_exponent(spec.reduced(), u);
}

ComplexValue characteristic_function(const ProcessSpec& spec, double u) {
  return std::exp(cf_exponent(spec, u));
}

double DensityGrid::density_at(double x) const {
  if (x < x_min || x > x_max) return 0.0;
  const double pos = (x - x_min) / dx;
  const int k = std::min(static_cast<int>(pos), n - 2);
  const double frac = pos - k;
  return values[k] + frac * (values[k + 1] - values[k]);
}

double DensityGrid::mean() const {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
    acc += w * x_at(k) * values[k];
  }
  return acc * dx / mass;
}

DensityGrid density_grid(const ProcessSpec& spec, int n, double u_max,
                         double mass_tol) {
  if (!power_of_two(n) || n < 256)
    throw DomainError("density_grid: n must be a power of two >= 256");
  if (!(mass_tol > 0.0)) throw DomainError("density_grid: mass_tol <= 0");

  const double t_horizon = spec.horizon_t();
  auto phi_t = [&spec, t_horizon](double u) {
    return std::exp(t_horizon * cf_exponent(spec, u));
  };

  if (u_max == 0.0) {
    u_max = 16.0;
    while (std::abs(phi_t(u_max)) >= 1e-12) {
      u_max *= 2.0;
      if (u_max > 1.0e9)
        throw MassError("density_grid: characteristic function decays too slowly");
    }
  } else if (!(u_max > 0.0)) {
    throw DomainError("density_grid: u_max must be positive");
  }

  const double du = 2.0 * u_max / n;
  const double dx = 2.0 * pi / (n * du);  // Nyquist relation
  const double center = spec.location() * t_horizon;
  const double x_min = center - 0.5 * n * dx;

  // f(x_k) = du/(2 pi) e^{i u_max x_k} sum_j phi(u_j) e^{-i j du x_min} W^{jk}
  std::vector<ComplexValue> work(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = -u_max + j * du;
    const ComplexValue rot = std::exp(ComplexValue(0.0, -j * du * x_min));
    work[static_cast<size_t>(j)] = phi_t(u) * rot;
  }
  fft(work);

  DensityGrid grid;
  grid.n = n;
  grid.dx = dx;
  grid.x_min = x_min;
  grid.x_max = x_min + (n - 1) * dx;
  grid.u_max = u_max;
  grid.values.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = x_min + k * dx;
    const ComplexValue rot = std::exp(ComplexValue(0.0, u_max * x));
    const double v = (du / (2.0 * pi)) * (rot * work[static_cast<size_t>(k)]).real();
    grid.values[static_cast<size_t>(k)] = std::max(v, 0.0);  // clip ringing
  }

  double mass = 0.0;
  for (int k = 0; k < n; ++k) {
    const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
    mass += w * grid.values[static_cast<size_t>(k)];
  }
  grid.mass = mass * dx;
  if (std::abs(grid.mass - 1.0) > mass_tol)
    throw MassError("density_grid: mass " + std::to_string(grid.mass) +
                    " outside tolerance (cutoff too small?)");
  return grid;
}

std::vector<double> sample(const DensityGrid& grid, int n_samples,
                           std::uint64_t seed) {
  if (n_samples < 0) throw DomainError("sample: negative count");

  // cumulative trapezoid CDF at the grid nodes
  std::vector<double> cdf(static_cast<size_t>(grid.n));
  cdf[0] = 0.0;
  for (int k = 1; k < grid.n; ++k)
    cdf[static_cast<size_t>(k)] =
        cdf[static_cast<size_t>(k - 1)] +
        0.5 * (grid.values[static_cast<size_t>(k - 1)] +
               grid.values[static_cast<size_t>(k)]) *
            grid.dx;
  const double total = cdf.back();
  if (!(total > 0.0)) throw MassError("sample: empty density grid");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<double> out;
  out.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double target = uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    const size_t hi = std::min(
        static_cast<size_t>(std::distance(cdf.begin(), it)), cdf.size() - 1);
    const size_t lo = hi - 1;
    const double seg = cdf[hi] - cdf[lo];
    const double frac = seg > 0.0 ? (target - cdf[lo]) / seg : 0.5;
    out.push_back(grid.x_min + (static_cast<double>(lo) + frac) * grid.dx);
  }
  return out;
}

std::vector<double> sample(const ProcessSpec& spec, int n_samples,
                           std::uint64_t seed) {
  return sample(density_grid(spec), n_samples, seed);
}

void write_csv(const DensityGrid& grid, std::ostream& os) {
  os << "x,value\n";
  os.precision(17);
  for (int k = 0; k < grid.n; ++k)
    os << grid.x_at(k) << ',' << grid.values[static_cast<size_t>(k)] << '\n';
}

}  // namespace tsgeo
