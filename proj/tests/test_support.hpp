#pragma once

#include <random>

#include "tsgeo/params.hpp"

namespace tsupport {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }

  // tail index away from the excluded value 1 and the interval ends
  double index() {
    return gen() % 2 == 0 ? uniform(0.15, 0.9) : uniform(1.1, 1.85);
  }

  double scale() { return uniform(0.3, 3.0); }
  double decay() { return uniform(0.5, 4.0); }
  double horizon() { return uniform(0.5, 2.0); }
};

inline tsgeo::ProcessSpec random_spec(tsgeo::ModelKind kind, Rng& rng) {
  const double m = rng.uniform(-1.0, 1.0);
  switch (kind) {
    case tsgeo::ModelKind::CTS:
      return tsgeo::validate(
          tsgeo::CtsParams{rng.index(), rng.scale(), rng.decay(), rng.decay(), m},
          rng.horizon());
    case tsgeo::ModelKind::GTS:
      return tsgeo::validate(
          tsgeo::GtsParams{rng.index(), rng.index(), rng.scale(), rng.scale(),
                           rng.decay(), rng.decay(), m},
          rng.horizon());
    case tsgeo::ModelKind::RDTS:
      return tsgeo::validate(
          tsgeo::RdtsParams{rng.index(), rng.index(), rng.scale(), rng.scale(),
                            rng.decay(), rng.decay(), m},
          rng.horizon());
  }
  throw tsgeo::DomainError("unknown kind");
}

inline tsgeo::MeasurePair random_pair(tsgeo::ModelKind kind, Rng& rng) {
  return tsgeo::make_equivalent(random_spec(kind, rng), rng.decay(),
                                rng.decay());
}

}  // namespace tsupport
