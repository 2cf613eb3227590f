#ifndef STATFIELD_GRID_HPP
#define STATFIELD_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "statfield/errors.hpp"

namespace statfield {

using Complex = std::complex<double>;

/// Relative density floor: below floor()*max(rho) the phase (and any division
/// by rho) is treated as undefined.
constexpr double kDensityFloorRel = 1e-12;

/// Uniform 1-D grid x_k = x_min + k*dx, k = 0..n-1, dx = (x_max - x_min)/n.
/// The right endpoint is excluded (periodic/FFT convention); all fields of a
/// scenario share one GridSpec.
struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  int n = 0;

  GridSpec() = default;
  GridSpec(double xmin, double xmax, int npts);

  double dx() const { return (x_max - x_min) / n; }
  double x(int k) const { return x_min + k * dx(); }
  std::vector<double> points() const;

  bool operator==(const GridSpec& o) const {
    return x_min == o.x_min && x_max == o.x_max && n == o.n;
  }
};

/// Real field sampled on a GridSpec.
struct SampledField {
  GridSpec grid;
  std::vector<double> values;

  SampledField() = default;
  explicit SampledField(const GridSpec& g, double fill = 0.0)
      : grid(g), values(static_cast<std::size_t>(g.n), fill) {}
  SampledField(const GridSpec& g, std::vector<double> v);

  int size() const { return grid.n; }
  double& operator[](int k) { return values[static_cast<std::size_t>(k)]; }
  double operator[](int k) const { return values[static_cast<std::size_t>(k)]; }
};

/// Uniform-grid quadrature: sum f*dx (trapezoid rule on the periodic
/// extension). Exact for periodic/constant fields, and equal to the plain
/// trapezoid rule up to the boundary terms the decay conditions kill.
double integrate(const SampledField& f);
double integrate_product(const SampledField& a, const SampledField& b);

/// Normalizes a nonnegative density in place to unit integral.
/// Throws NumericError if the integral is not positive and finite.
void normalize_density(SampledField& rho);

double max_abs(const SampledField& f);
bool all_finite(const std::vector<double>& v);

/// Checks the SampledField density invariants (finite, >= 0, unit integral
/// within tol); throws NumericError on violation.
void require_density(const SampledField& rho, double tol = 1e-8);

enum class DerivScheme { Central, Spectral };

/// d/dx or d²/dx² of a sampled field.
/// Central: 2nd-order stencils, one-sided closure at the edges.
/// Spectral: FFT differentiation, assuming negligible boundary values.
SampledField derivative(const SampledField& f, int order,
                        DerivScheme scheme = DerivScheme::Central);

/// Index range [lo, hi] of the connected above-floor region around the global
/// maximum of rho. Throws NodeError if sub-floor points occur strictly inside
/// it (i.e. the above-floor set is disconnected).
struct SupportRange {
  int lo = 0;
  int hi = -1;
  double floor_abs = 0.0;
  bool contains(int k) const { return k >= lo && k <= hi; }
};
SupportRange above_floor_range(const SampledField& rho,
                               double floor_rel = kDensityFloorRel);

/// Same but without the connectivity requirement: returns the range and a
/// flag telling whether interior sub-floor points exist.
SupportRange above_floor_range_lenient(const SampledField& rho, bool* has_interior_gap,
                                       double floor_rel = kDensityFloorRel);

}  // namespace statfield

#endif
