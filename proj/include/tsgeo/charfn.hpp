#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "tsgeo/params.hpp"
#include "tsgeo/special.hpp"

namespace tsgeo {

/// log of the unit-time characteristic function. Complex powers
/// (lambda -+ iu)^a take the principal branch; the base always has real
/// part lambda > 0, so no cut is crossed.
ComplexValue cf_exponent(const ProcessSpec& spec, double u);

/// Unit-time characteristic function phi(u) = exp(cf_exponent). The horizon
/// enters only through density_grid, which raises phi to the power T.
ComplexValue characteristic_function(const ProcessSpec& spec, double u);

/// Discretized density of X_T from Fourier inversion of phi(u)^T.
struct DensityGrid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;                   // power of two, >= 256
  double dx = 0.0;
  std::vector<double> values;  // non-negative, trapezoid mass ~ 1
  double mass = 0.0;
  double u_max = 0.0;          // frequency cutoff actually used

  double x_at(int k) const { return x_min + k * dx; }
  /// Linear interpolation; zero outside the grid.
  double density_at(double x) const;
  /// Trapezoid mean of the grid.
  double mean() const;
};

/// Inverts the characteristic function onto a symmetric grid centered at the
/// mean. When u_max is 0 the cutoff doubles adaptively until
/// |phi(u_max)^T| < 1e-12. Throws MassError when the trapezoid mass misses 1
/// by more than mass_tol (the sign that the cutoff was too small), and
/// DomainError when n is not a power of two >= 256.
DensityGrid density_grid(const ProcessSpec& spec, int n = 4096,
                         double u_max = 0.0, double mass_tol = 1e-6);

/// Inverse-CDF draws from the cumulative trapezoid of the grid.
/// Deterministic for a fixed seed.
std::vector<double> sample(const DensityGrid& grid, int n_samples,
                           std::uint64_t seed);
std::vector<double> sample(const ProcessSpec& spec, int n_samples,
                           std::uint64_t seed);

/// CSV serialization, header "x,value".
void write_csv(const DensityGrid& grid, std::ostream& os);

}  // namespace tsgeo
