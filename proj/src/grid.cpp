#include "statfield/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "statfield/fft.hpp"

namespace statfield {

GridSpec::GridSpec(double xmin, double xmax, int npts) : x_min(xmin), x_max(xmax), n(npts) {
  if (n < 8) throw ConfigError("GridSpec: n must be >= 8");
  if (!(x_max > x_min)) throw ConfigError("GridSpec: x_max must exceed x_min");
}

std::vector<double> GridSpec::points() const {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) xs[static_cast<std::size_t>(k)] = x(k);
  return xs;
}

SampledField::SampledField(const GridSpec& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != g.n)
    throw ConfigError("SampledField: value count does not match grid");
}

double integrate(const SampledField& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s * f.grid.dx();
}

double integrate_product(const SampledField& a, const SampledField& b) {
  if (!(a.grid == b.grid)) throw ConfigError("integrate_product: grid mismatch");
  double s = 0.0;
  for (int k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s * a.grid.dx();
}

void normalize_density(SampledField& rho) {
  const double z = integrate(rho);
  if (!(z > 0.0) || !std::isfinite(z))
    throw NumericError("Normalize", "density integral is not positive/finite");
  for (double& v : rho.values) v /= z;
}

double max_abs(const SampledField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void require_density(const SampledField& rho, double tol) {
  if (!all_finite(rho.values)) throw NumericError("Density", "non-finite values");
  for (double v : rho.values)
    if (v < 0.0) throw NumericError("Density", "negative values");
  const double z = integrate(rho);
  if (std::abs(z - 1.0) > tol)
    throw NumericError("Density", "integral deviates from 1 by " + std::to_string(z - 1.0));
}

namespace {

SampledField central_derivative(const SampledField& f, int order) {
  const int n = f.size();
  const double dx = f.grid.dx();
  SampledField out(f.grid);
  if (order == 1) {
    const double c = 1.0 / (2.0 * dx);
    for (int k = 1; k + 1 < n; ++k) out[k] = (f[k + 1] - f[k - 1]) * c;
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * c;
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * c;
  } else {
    const double c = 1.0 / (dx * dx);
    for (int k = 1; k + 1 < n; ++k) out[k] = (f[k + 1] - 2.0 * f[k] + f[k - 1]) * c;
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * c;
    out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * c;
  }
  return out;
}

SampledField spectral_derivative(const SampledField& f, int order) {
  const int n = f.size();
  const int nh = n / 2 + 1;
  const double dx = f.grid.dx();
  std::vector<Complex> hat(static_cast<std::size_t>(nh));
  fft::forward_r2c(f.values.data(), hat.data(), n);
  const double k0 = 2.0 * std::numbers::pi / (n * dx);
  for (int j = 0; j < nh; ++j) {
    const double kj = k0 * j;
    if (order == 1) {
      hat[static_cast<std::size_t>(j)] *= Complex(0.0, kj);
      // Nyquist mode has no well-defined odd derivative on a real grid.
      if (n % 2 == 0 && j == n / 2) hat[static_cast<std::size_t>(j)] = 0.0;
    } else {
      hat[static_cast<std::size_t>(j)] *= -kj * kj;
    }
  }
  SampledField out(f.grid);
  fft::inverse_c2r(hat.data(), out.values.data(), n);
  return out;
}

}  // namespace

SampledField derivative(const SampledField& f, int order, DerivScheme scheme) {
  if (order != 1 && order != 2) throw ConfigError("derivative: order must be 1 or 2");
  if (f.size() < 8) throw ConfigError("derivative: grid too small");
  return scheme == DerivScheme::Central ? central_derivative(f, order)
                                        : spectral_derivative(f, order);
}

SupportRange above_floor_range_lenient(const SampledField& rho, bool* has_interior_gap,
                                       double floor_rel) {
  const int n = rho.size();
  double m = 0.0;
  for (double v : rho.values) m = std::max(m, v);
  const double floor_abs = floor_rel * m;

  int lo = 0, hi = n - 1;
  while (lo < n && rho[lo] <= floor_abs) ++lo;
  while (hi >= 0 && rho[hi] <= floor_abs) --hi;
  bool gap = false;
  for (int k = lo; k <= hi; ++k)
    if (rho[k] <= floor_abs) { gap = true; break; }
  if (has_interior_gap) *has_interior_gap = gap;
  return {lo, hi, floor_abs};
}

SupportRange above_floor_range(const SampledField& rho, double floor_rel) {
  bool gap = false;
  SupportRange r = above_floor_range_lenient(rho, &gap, floor_rel);
  if (r.lo > r.hi) throw node_error("density is everywhere below the floor");
  if (gap) throw node_error("density has interior sub-floor points (node)");
  return r;
}

}  // namespace statfield
