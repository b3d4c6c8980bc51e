#include <cmath>
#include <doctest.h>

#include "test_support.hpp"
#include "tsgeo/levy.hpp"
#include "tsgeo/quadrature.hpp"

using namespace tsgeo;

TEST_CASE("stable density") {
  CHECK(stable_levy_density(1.0, 1.0, 1.0, 0.5, 0.5) == 1.0);
  CHECK(stable_levy_density(-2.0, 1.0, 3.0, 0.5, 0.5) ==
        doctest::Approx(1.0606601717798212).epsilon(1e-14));
  // power-law blowup toward the origin
  CHECK(stable_levy_density(1e-3, 1.0, 1.0, 0.5, 0.5) ==
        doctest::Approx(31622.776601683792).epsilon(1e-12));
  CHECK_THROWS_AS(stable_levy_density(0.0, 1, 1, 0.5, 0.5), DomainError);
}

TEST_CASE("tempering factor") {
  const ProcessSpec gts = validate(GtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  const ProcessSpec rdts = validate(RdtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  CHECK(tempering(1.0, gts) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(tempering(-1.0, gts) == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));
  CHECK(tempering(1.0, rdts) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  // limit 1 at the origin
  CHECK(tempering(1e-12, gts) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(tempering(-1e-12, rdts) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS(tempering(0.0, gts), DomainError);
  CHECK_THROWS_AS(tempering(1e-301, gts), DomainError);
}

TEST_CASE("jump density") {
  const ProcessSpec gts = validate(GtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  CHECK(levy_density(1.0, gts) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-15));

  // classical record evaluated directly equals its seven-parameter view
  tsupport::Rng rng(7);
  const ProcessSpec cts = validate(CtsParams{0.7, 1.3, 2.0, 1.0, 0.1}, 1.0);
  const ProcessSpec as_gts = validate(cts.cts().as_gts(), 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = (rng.gen() % 2 ? 1.0 : -1.0) * rng.uniform(1e-6, 20.0);
    CHECK(levy_density(x, cts) == levy_density(x, as_gts));
    CHECK(log_levy_density(x, cts) == log_levy_density(x, as_gts));
  }

  for (int i = 0; i < 200; ++i) {
    const double x = (rng.gen() % 2 ? 1.0 : -1.0) * rng.uniform(1e-8, 30.0);
    CHECK(levy_density(x, gts) >= 0.0);
  }
}

TEST_CASE("jump density tail integral") {
  // frozen: int_{0.01}^inf x^{-1.5} e^{-2x} dx = sqrt(2) Gamma(-1/2, 0.02)
  const ProcessSpec gts = validate(GtsParams{0.5, 0.5, 1, 1, 2, 2, 0}, 1.0);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  const QuadResult r = integrate_tail(
      [&gts](double x) { return levy_density(x, gts); }, 0.01, cfg);
  CHECK(r.value == doctest::Approx(15.385415431749478).epsilon(1e-10));
}

TEST_CASE("density ratio") {
  const ProcessSpec base = validate(GtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  const MeasurePair same = make_equivalent(base, 2.0, 3.0);
  const MeasurePair pair = make_equivalent(base, 1.5, 2.5);

  CHECK(radon_nikodym(0.7, same) == 1.0);
  CHECK(radon_nikodym(-4.0, same) == 1.0);
  CHECK(log_radon_nikodym(0.7, same) == 0.0);

  CHECK(radon_nikodym(2.0, pair) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(log_radon_nikodym(-2.0, pair) == -1.0);

  const ProcessSpec rbase = validate(RdtsParams{0.5, 0.5, 1, 1, 2, 2, 0}, 1.0);
  const MeasurePair rpair = make_equivalent(rbase, 1.0, 1.0);
  CHECK(log_radon_nikodym(1.5, rpair) == doctest::Approx(-1.125).epsilon(1e-15));

  CHECK_THROWS_AS(radon_nikodym(0.0, pair), DomainError);
}

TEST_CASE("density ratio properties") {
  tsupport::Rng rng(23);
  for (ModelKind kind : {ModelKind::GTS, ModelKind::CTS, ModelKind::RDTS}) {
    const MeasurePair pair = tsupport::random_pair(kind, rng);
    const MeasurePair swapped =
        check_equivalent(pair.q(), pair.p(), 1e-9);
    for (int i = 0; i < 100; ++i) {
      const double x = (rng.gen() % 2 ? 1.0 : -1.0) * rng.uniform(1e-4, 8.0);
      // closed-form exponent equals the direct density ratio
      const double ratio =
          levy_density(x, pair.p()) / levy_density(x, pair.q());
      CHECK(radon_nikodym(x, pair) ==
            doctest::Approx(ratio).epsilon(1e-14));
      // exponential of the log form
      CHECK(std::exp(log_radon_nikodym(x, pair)) ==
            doctest::Approx(radon_nikodym(x, pair)).epsilon(1e-14));
      // swapping the measures inverts the derivative
      CHECK(radon_nikodym(x, pair) * radon_nikodym(x, swapped) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
    // psi is continuous at the origin with limit 0
    CHECK(std::abs(log_radon_nikodym(1e-10, pair)) < 1e-8);
    CHECK(std::abs(log_radon_nikodym(-1e-10, pair)) < 1e-8);
  }
}

TEST_CASE("scores vanish off their own tail") {
  const ProcessSpec gts = validate(GtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  const ProcessSpec rdts = validate(RdtsParams{0.5, 0.5, 1, 1, 2, 3, 0}, 1.0);
  CHECK(score_lambda_plus(1.5, gts) == -1.5);
  CHECK(score_lambda_plus(-1.5, gts) == 0.0);
  CHECK(score_lambda_minus(-2.0, gts) == -2.0);
  CHECK(score_lambda_minus(2.0, gts) == 0.0);
  CHECK(score_lambda_plus(2.0, rdts) == -2.0);
  CHECK(temper_score_plus(1.5, gts) == score_lambda_plus(1.5, gts));
  CHECK(temper_score_minus(-2.5, rdts) == score_lambda_minus(-2.5, rdts));
}
