#include "statfield/observables.hpp"

#include <algorithm>
#include <cmath>

namespace statfield {

namespace {

SampledField density_of(const WaveFunction& psi) {
  SampledField rho(psi.grid);
  for (int k = 0; k < psi.size(); ++k) rho[k] = std::norm(psi.values[static_cast<std::size_t>(k)]);
  return rho;
}

double spectral_p_mean(const WaveFunction& psi) {
  const MomentumSpectrum phi = fourier_forward(psi);
  double m = 0.0;
  for (std::size_t i = 0; i < phi.phi.size(); ++i)
    m += std::norm(phi.phi[i]) / phi.s_const * phi.p[i];
  return m * phi.dp;
}

Means means_common(const SampledField& rho, double p_mean, const SampledField& V) {
  Means out;
  out.p_mean = p_mean;
  const auto xs = rho.grid.points();
  double xm = 0.0, vm = 0.0;
  for (int k = 0; k < rho.size(); ++k) {
    xm += rho[k] * xs[static_cast<std::size_t>(k)];
    vm += rho[k] * V[k];
  }
  const double dx = rho.grid.dx();
  out.x_mean = xm * dx;
  out.V_mean = vm * dx;
  const SampledField vp = derivative(V, 1, DerivScheme::Central);
  out.F_mean = -integrate_product(rho, vp);
  return out;
}

}  // namespace

Means means(const FieldState& state, const SampledField& V) {
  const SampledField g = momentum_field(state);
  return means_common(state.rho, integrate_product(state.rho, g), V);
}

Means means(const WaveFunction& psi, const SampledField& V) {
  return means_common(density_of(psi), spectral_p_mean(psi), V);
}

ObservableRecord make_record(const FieldState& state, const RecordContext& ctx) {
  ObservableRecord rec;
  rec.t = state.t;
  const Means m = means(state, *ctx.potential);
  rec.x_mean = m.x_mean;
  rec.p_mean = m.p_mean;
  rec.F_mean = m.F_mean;
  rec.V_mean = m.V_mean;
  if (ctx.rule == MomentumRule::Hybrid) {
    rec.T_mean = kinetic_split(state, ctx.mass, ctx.s_const).gradient_part;
  } else {
    rec.T_mean = kinetic_expectation(to_wavefunction(state, ctx.s_const), ctx.mass);
  }
  rec.E_mean = rec.T_mean + rec.V_mean;
  rec.fisher_I = fisher_information(state.rho);
  rec.entropy = shannon_entropy(state.rho);
  return rec;
}

ObservableRecord make_record(const WaveFunction& psi, const RecordContext& ctx) {
  ObservableRecord rec;
  rec.t = psi.t;
  const SampledField rho = density_of(psi);
  const Means m = means(psi, *ctx.potential);
  rec.x_mean = m.x_mean;
  rec.p_mean = m.p_mean;
  rec.F_mean = m.F_mean;
  rec.V_mean = m.V_mean;
  rec.T_mean = kinetic_expectation(psi, ctx.mass);
  rec.E_mean = rec.T_mean + rec.V_mean;
  rec.fisher_I = fisher_information(rho);
  rec.entropy = shannon_entropy(rho);
  return rec;
}

std::vector<double> differentiate_series(const std::vector<double>& t,
                                         const std::vector<double>& f) {
  const int n = static_cast<int>(t.size());
  if (n < 5) throw ConfigError("differentiate_series: need at least 5 samples");
  const double h = t[1] - t[0];
  for (int k = 1; k + 1 < n; ++k)
    if (std::abs((t[static_cast<std::size_t>(k + 1)] - t[static_cast<std::size_t>(k)]) - h) >
        1e-9 * std::max(1.0, std::abs(h)))
      throw ConfigError("differentiate_series: series is not uniformly spaced");

  auto at = [&](int k) { return f[static_cast<std::size_t>(k)]; };
  std::vector<double> d(static_cast<std::size_t>(n));
  const double c = 1.0 / (12.0 * h);
  d[0] = (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4)) * c;
  d[1] = (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4)) * c;
  for (int k = 2; k + 2 < n; ++k)
    d[static_cast<std::size_t>(k)] =
        (at(k - 2) - 8.0 * at(k - 1) + 8.0 * at(k + 1) - at(k + 2)) * c;
  d[static_cast<std::size_t>(n - 2)] =
      (3.0 * at(n - 1) + 10.0 * at(n - 2) - 18.0 * at(n - 3) + 6.0 * at(n - 4) - at(n - 5)) * c;
  d[static_cast<std::size_t>(n - 1)] = (25.0 * at(n - 1) - 48.0 * at(n - 2) + 36.0 * at(n - 3) -
                                        16.0 * at(n - 4) + 3.0 * at(n - 5)) *
                                       c;
  return d;
}

std::pair<std::vector<double>, std::vector<double>> ehrenfest_residuals(
    const std::vector<ObservableRecord>& records, double mass) {
  const std::size_t n = records.size();
  std::vector<double> t(n), x(n), p(n), F(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = records[i].t;
    x[i] = records[i].x_mean;
    p[i] = records[i].p_mean;
    F[i] = records[i].F_mean;
  }
  const std::vector<double> dxdt = differentiate_series(t, x);
  const std::vector<double> dpdt = differentiate_series(t, p);
  std::vector<double> r1(n), r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    r1[i] = dxdt[i] - p[i] / mass;
    r2[i] = dpdt[i] - F[i];
  }
  return {std::move(r1), std::move(r2)};
}

double fisher_information(const SampledField& rho, DerivScheme scheme) {
  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(rho, &gap);
  const SampledField rp = derivative(rho, 1, scheme);
  double s = 0.0;
  for (int k = 0; k < rho.size(); ++k) {
    if (rho[k] <= sup.floor_abs) continue;  // bounded by floor * |ln floor|
    s += rp[k] * rp[k] / rho[k];
  }
  return s * rho.grid.dx();
}

double shannon_entropy(const SampledField& rho) {
  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(rho, &gap);
  double s = 0.0;
  for (int k = 0; k < rho.size(); ++k) {
    if (rho[k] <= sup.floor_abs) continue;
    s -= rho[k] * std::log(rho[k]);
  }
  return s * rho.grid.dx();
}

double discrete_entropy(const std::vector<double>& probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw NumericError("Entropy", "negative probability");
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

namespace {

// 4-point Lagrange (cubic) interpolation on the uniform grid; indices clamp
// at the boundary.
double interp_cubic(const SampledField& f, double x) {
  const int n = f.size();
  const double dx = f.grid.dx();
  const double u = (x - f.grid.x_min) / dx;
  int i = static_cast<int>(std::floor(u));
  i = std::clamp(i, 1, n - 3);
  const double tt = u - i;
  const double w0 = -tt * (tt - 1.0) * (tt - 2.0) / 6.0;
  const double w1 = (tt * tt - 1.0) * (tt - 2.0) / 2.0;
  const double w2 = -tt * (tt + 1.0) * (tt - 2.0) / 2.0;
  const double w3 = tt * (tt * tt - 1.0) / 6.0;
  return w0 * f[i - 1] + w1 * f[i] + w2 * f[i + 1] + w3 * f[i + 2];
}

}  // namespace

RelativeEntropyShift relative_entropy_shift(const SampledField& rho, double dx_shift) {
  RelativeEntropyShift out;
  out.quadratic = -0.5 * dx_shift * dx_shift * fisher_information(rho);
  if (dx_shift == 0.0) {
    out.G = 0.0;
    return out;
  }
  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(rho, &gap);
  const auto xs = rho.grid.points();
  double g = 0.0;
  for (int k = 0; k < rho.size(); ++k) {
    if (rho[k] <= sup.floor_abs) continue;
    const double shifted = interp_cubic(rho, xs[static_cast<std::size_t>(k)] + dx_shift);
    if (shifted <= sup.floor_abs) continue;
    g -= rho[k] * std::log(rho[k] / shifted);
  }
  out.G = g * rho.grid.dx();
  return out;
}

CompositionReport entropy_composition_check(const SampledField& rho1,
                                            const SampledField& rho2) {
  CompositionReport rep;
  rep.entropy_1 = shannon_entropy(rho1);
  rep.entropy_2 = shannon_entropy(rho2);
  rep.fisher_1 = fisher_information(rho1);
  rep.fisher_2 = fisher_information(rho2);

  bool gap = false;
  const SupportRange s1 = above_floor_range_lenient(rho1, &gap);
  const SupportRange s2 = above_floor_range_lenient(rho2, &gap);
  const SampledField d1 = derivative(rho1, 1, DerivScheme::Spectral);
  const SampledField d2 = derivative(rho2, 1, DerivScheme::Spectral);

  // Genuine 2-D sums over the tensor grid (per-axis floor masks).
  double s12 = 0.0, i12 = 0.0;
  for (int i = 0; i < rho1.size(); ++i) {
    if (rho1[i] <= s1.floor_abs) continue;
    for (int j = 0; j < rho2.size(); ++j) {
      if (rho2[j] <= s2.floor_abs) continue;
      const double r = rho1[i] * rho2[j];
      s12 -= r * std::log(r);
      const double gx = d1[i] * rho2[j];
      const double gy = rho1[i] * d2[j];
      i12 += (gx * gx + gy * gy) / r;
    }
  }
  const double da = rho1.grid.dx() * rho2.grid.dx();
  rep.entropy_12 = s12 * da;
  rep.fisher_12 = i12 * da;
  rep.entropy_gap = rep.entropy_12 - rep.entropy_1 - rep.entropy_2;
  rep.fisher_gap = rep.fisher_12 - rep.fisher_1 - rep.fisher_2;
  return rep;
}

}  // namespace statfield
