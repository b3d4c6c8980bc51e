#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numeric>
#include <sstream>

#include "test_support.hpp"
#include "tsgeo/charfn.hpp"
#include "tsgeo/levy.hpp"
#include "tsgeo/quadrature.hpp"

using namespace tsgeo;

namespace {

// Independent oracle: exponent of the characteristic function as the
// fully compensated jump integral int (e^{iux} - 1 - iux) levy(dx) plus ium,
// each side integrated numerically.
ComplexValue lk_exponent(const ProcessSpec& spec, double u) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;
  const double eps = 1e-10;
  ComplexValue acc(0.0, spec.location() * u);
  for (double sign : {1.0, -1.0}) {
    auto re = [&](double y) {
      const double x = sign * y;
      return (std::cos(u * x) - 1.0) * levy_density(x, spec);
    };
    auto im = [&](double y) {
      const double x = sign * y;
      return (std::sin(u * x) - u * x) * levy_density(x, spec);
    };
    acc += ComplexValue(integrate_tail(re, eps, cfg).value,
                        integrate_tail(im, eps, cfg).value);
  }
  return acc;
}

ProcessSpec reference_gts() {
  return validate(GtsParams{0.5, 0.5, 1.0, 1.0, 2.0, 3.0, 0.0}, 1.0);
}

}  // namespace

TEST_CASE("characteristic function at the origin") {
  tsupport::Rng rng(2);
  for (ModelKind kind : {ModelKind::GTS, ModelKind::CTS, ModelKind::RDTS}) {
    const ProcessSpec spec = tsupport::random_spec(kind, rng);
    const ComplexValue one = characteristic_function(spec, 0.0);
    CHECK(one.real() == 1.0);
    CHECK(one.imag() == 0.0);
  }
}

TEST_CASE("conjugate symmetry and modulus bound") {
  tsupport::Rng rng(4);
  for (ModelKind kind : {ModelKind::GTS, ModelKind::CTS, ModelKind::RDTS}) {
    const ProcessSpec spec = tsupport::random_spec(kind, rng);
    for (int i = 0; i < 100; ++i) {
      const double u = rng.uniform(0.0, 30.0);
      const ComplexValue a = characteristic_function(spec, u);
      const ComplexValue b = characteristic_function(spec, -u);
      CHECK(b.real() == doctest::Approx(a.real()).epsilon(1e-12));
      CHECK(b.imag() == doctest::Approx(-a.imag()).epsilon(1e-12));
      CHECK(std::abs(a) <= 1.0 + 1e-13);
    }
  }
}

TEST_CASE("frozen exponential-family value at u = 1") {
  // closed form checked against independent high-precision quadrature of the
  // compensated jump integral before the build
  const ComplexValue v = characteristic_function(reference_gts(), 1.0);
  CHECK(v.real() == doctest::Approx(0.79570271072626939812).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(-0.017395982203972336061).epsilon(1e-10));
}

TEST_CASE("jump-integral oracle for both exponent families") {
  tsupport::Rng rng(8);
  const ProcessSpec gts = reference_gts();
  for (int i = 0; i < 20; ++i) {
    const double u = rng.uniform(0.1, 6.0);
    const ComplexValue closed = characteristic_function(gts, u);
    const ComplexValue oracle = std::exp(lk_exponent(gts, u));
    CHECK(std::abs(closed - oracle) < 1e-7);
  }

  // the Gaussian-tempered closed form runs through the hypergeometric
  // series; same oracle, same tolerance
  const ProcessSpec rdts =
      validate(RdtsParams{0.5, 0.7, 1.0, 1.5, 2.0, 1.5, 0.1}, 1.0);
  for (double u : {0.3, 1.0, 2.5, 5.0}) {
    const ComplexValue closed = characteristic_function(rdts, u);
    const ComplexValue oracle = std::exp(lk_exponent(rdts, u));
    CHECK(std::abs(closed - oracle) < 1e-7);
  }
}

TEST_CASE("symmetric Gaussian-tempered spec has a real transform") {
  const ProcessSpec spec =
      validate(RdtsParams{0.5, 0.5, 1.0, 1.0, 2.0, 2.0, 0.0}, 1.0);
  for (double u : {0.1, 0.7, 1.9, 4.2, 9.0}) {
    const ComplexValue v = characteristic_function(spec, u);
    CHECK(std::abs(v.imag()) <= 1e-14);
  }
}

TEST_CASE("transform respects the equivalent-measure change") {
  const MeasurePair pair = make_equivalent(reference_gts(), 1.5, 2.5);
  const ComplexValue v = characteristic_function(pair.q(), 0.0);
  CHECK(v.real() == 1.0);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("density inversion") {
  const ProcessSpec spec = validate(CtsParams{0.5, 1.0, 2.0, 3.0, 0.0}, 1.0);
  const DensityGrid grid = density_grid(spec);
  CHECK(std::abs(grid.mass - 1.0) <= 1e-6);
  CHECK(grid.n == 4096);
  for (double v : grid.values) CHECK(v >= 0.0);

  // grid mean against the transform derivative at the origin
  const double h = 1e-3;
  const double t = spec.horizon_t();
  const ComplexValue dphi =
      (std::exp(t * cf_exponent(spec, h)) - std::exp(t * cf_exponent(spec, -h))) /
      ComplexValue(0.0, 2.0 * h);
  CHECK(grid.mean() == doctest::Approx(dphi.real()).epsilon(1e-4));

  // the classical grid equals its seven-parameter view pointwise
  const ProcessSpec gts = validate(spec.cts().as_gts(), 1.0);
  const DensityGrid grid2 = density_grid(gts);
  for (int k = 0; k < grid.n; k += 97)
    CHECK(grid.values[static_cast<size_t>(k)] ==
          doctest::Approx(grid2.values[static_cast<size_t>(k)]).epsilon(1e-12));

  CHECK_THROWS_AS(density_grid(spec, 1000), DomainError);
  CHECK_THROWS_AS(density_grid(spec, 128), DomainError);
  CHECK_THROWS_AS(density_grid(spec, 4096, 2.0), MassError);
}

TEST_CASE("grid sampling") {
  const ProcessSpec spec = validate(CtsParams{0.5, 1.0, 2.0, 3.0, 0.0}, 1.0);
  const DensityGrid grid = density_grid(spec);

  const std::vector<double> a = sample(grid, 2000, 99);
  const std::vector<double> b = sample(grid, 2000, 99);
  CHECK(a == b);  // determinism

  const int n = 100000;
  const std::vector<double> draws = sample(grid, n, 1234);

  // sample mean within three standard errors of the grid mean
  const double mean = std::accumulate(draws.begin(), draws.end(), 0.0) / n;
  double var = 0.0;
  for (double x : draws) var += (x - mean) * (x - mean);
  var /= n - 1;
  const double se = std::sqrt(var / n);
  CHECK(std::abs(mean - grid.mean()) <= 3.0 * se);

  // Kolmogorov-Smirnov distance against the grid CDF
  std::vector<double> sorted = draws;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cdf(static_cast<size_t>(grid.n), 0.0);
  for (int k = 1; k < grid.n; ++k)
    cdf[static_cast<size_t>(k)] =
        cdf[static_cast<size_t>(k - 1)] +
        0.5 * (grid.values[static_cast<size_t>(k - 1)] +
               grid.values[static_cast<size_t>(k)]) *
            grid.dx;
  const double total = cdf.back();
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sorted[static_cast<size_t>(i)];
    const double pos = (x - grid.x_min) / grid.dx;
    const int k = std::min(static_cast<int>(pos), grid.n - 2);
    const double frac = pos - k;
    const double fx = (cdf[static_cast<size_t>(k)] +
                       frac * (cdf[static_cast<size_t>(k + 1)] -
                               cdf[static_cast<size_t>(k)])) /
                      total;
    const double emp_hi = static_cast<double>(i + 1) / n;
    const double emp_lo = static_cast<double>(i) / n;
    ks = std::max({ks, std::abs(emp_hi - fx), std::abs(fx - emp_lo)});
  }
  CHECK(ks < 0.01);
}

TEST_CASE("grid CSV serialization") {
  const ProcessSpec spec = validate(CtsParams{0.5, 1.0, 2.0, 3.0, 0.0}, 1.0);
  const DensityGrid grid = density_grid(spec, 256, 64.0, 1e-3);
  std::ostringstream os;
  write_csv(grid, os);
  const std::string text = os.str();
  CHECK(text.substr(0, 8) == "x,value\n");
  CHECK(std::count(text.begin(), text.end(), '\n') == 257);
}
