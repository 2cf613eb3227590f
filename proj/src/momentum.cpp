#include "statfield/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "statfield/fft.hpp"
#include "statfield/observables.hpp"

namespace statfield {

namespace {

// Conjugate momenta for an n-point grid: kappa_j = 2 pi j~/(n dx) with j~ the
// signed alias of j, p = s * kappa, sorted ascending; Nyquist goes to +pi s/dx.
struct ConjugateGrid {
  std::vector<double> p;
  std::vector<int> dft_bin;  // DFT bin feeding each ascending slot
  double dp;
};

ConjugateGrid conjugate_grid(const GridSpec& g, double s_const) {
  const int n = g.n;
  const double dp = 2.0 * std::numbers::pi * s_const / (n * g.dx());
  ConjugateGrid cg;
  cg.dp = dp;
  cg.p.resize(static_cast<std::size_t>(n));
  cg.dft_bin.resize(static_cast<std::size_t>(n));
  // ascending order: j~ = -(n - n/2 - 1) .. n/2  (Nyquist positive)
  const int j_lo = n / 2 - n + 1;
  for (int i = 0; i < n; ++i) {
    const int jt = j_lo + i;
    cg.p[static_cast<std::size_t>(i)] = jt * dp;
    cg.dft_bin[static_cast<std::size_t>(i)] = (jt + n) % n;
  }
  return cg;
}

}  // namespace

MomentumSpectrum fourier_forward(const WaveFunction& psi) {
  const int n = psi.size();
  const double dx = psi.grid.dx();
  const double s = psi.s_const;

  std::vector<Complex> hat(psi.values);
  fft::forward(hat);

  const ConjugateGrid cg = conjugate_grid(psi.grid, s);
  MomentumSpectrum out;
  out.p = cg.p;
  out.dp = cg.dp;
  out.s_const = s;
  out.phi.resize(static_cast<std::size_t>(n));
  const double scale = dx / std::sqrt(2.0 * std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    const int j = cg.dft_bin[static_cast<std::size_t>(i)];
    const double kappa = cg.p[static_cast<std::size_t>(i)] / s;
    // continuum phase factor for the grid offset x_min
    const Complex phase = std::polar(1.0, -kappa * psi.grid.x_min);
    out.phi[static_cast<std::size_t>(i)] = scale * phase * hat[static_cast<std::size_t>(j)];
  }
  return out;
}

MomentumDensity quantum_momentum_density(const MomentumSpectrum& phi) {
  MomentumDensity out;
  out.p = phi.p;
  out.dp = phi.dp;
  out.w.resize(phi.phi.size());
  for (std::size_t i = 0; i < phi.phi.size(); ++i)
    out.w[i] = std::norm(phi.phi[i]) / phi.s_const;
  for (int k = 0; k < 3; ++k) {
    double m = 0.0;
    for (std::size_t i = 0; i < out.w.size(); ++i)
      m += out.w[i] * std::pow(out.p[i], k);
    out.moments[static_cast<std::size_t>(k)] = m * out.dp;
  }
  return out;
}

SampledField momentum_field(const FieldState& state) {
  const int n = state.rho.size();
  // Internal action scale keeping per-cell phase increments below pi/2, so
  // the complex route never wraps.
  double max_ds = 0.0;
  for (int k = 0; k + 1 < n; ++k)
    max_ds = std::max(max_ds, std::abs(state.s_phase[k + 1] - state.s_phase[k]));
  const double s_int = std::max(1.0, max_ds * 2.0 / std::numbers::pi);

  WaveFunction psi = to_wavefunction(state, s_int);
  std::vector<Complex> hat(psi.values);
  fft::forward(hat);
  const double k0 = 2.0 * std::numbers::pi / (n * state.rho.grid.dx());
  for (int j = 0; j < n; ++j) {
    const int jt = (j <= n / 2) ? j : j - n;
    double kj = k0 * jt;
    if (n % 2 == 0 && j == n / 2) kj = 0.0;  // drop Nyquist for odd derivative
    hat[static_cast<std::size_t>(j)] *= Complex(0.0, kj);
  }
  fft::inverse(hat);

  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(state.rho, &gap);
  const SampledField s_central = derivative(state.s_phase, 1, DerivScheme::Central);
  SampledField g(state.rho.grid);
  for (int k = 0; k < n; ++k) {
    if (state.rho[k] > sup.floor_abs) {
      const Complex grad = hat[static_cast<std::size_t>(k)];
      g[k] = s_int *
             (psi.values[static_cast<std::size_t>(k)].real() * grad.imag() -
              psi.values[static_cast<std::size_t>(k)].imag() * grad.real()) /
             state.rho[k];
    } else {
      g[k] = s_central[k];
    }
  }
  return g;
}

namespace {

MomentumDensity pushforward_density(const FieldState& state, std::vector<double> p_grid,
                                    double dp) {
  const int n = state.rho.size();
  const double dx = state.rho.grid.dx();
  const SampledField g = momentum_field(state);

  MomentumDensity out;
  out.p = std::move(p_grid);
  out.dp = dp;
  out.w.assign(out.p.size(), 0.0);
  const int nb = static_cast<int>(out.p.size());
  const double p_lo = out.p.front() - 0.5 * dp;
  for (int k = 0; k < n; ++k) {
    const double mass = state.rho[k] * dx;
    if (mass == 0.0) continue;
    int bin = static_cast<int>(std::floor((g[k] - p_lo) / dp));
    bin = std::clamp(bin, 0, nb - 1);
    out.w[static_cast<std::size_t>(bin)] += mass / dp;
  }
  // Moments of the pushforward computed exactly in x space (the binning
  // quantizes p to bin centers and would bias them by O(dp)).
  for (int mo = 0; mo < 3; ++mo) {
    double m = 0.0;
    for (int k = 0; k < n; ++k) m += state.rho[k] * std::pow(g[k], mo);
    out.moments[static_cast<std::size_t>(mo)] = m * dx;
  }
  return out;
}

}  // namespace

MomentumDensity classical_momentum_density(const FieldState& state,
                                           const std::vector<double>& p_grid) {
  if (p_grid.size() < 2) throw ConfigError("classical_momentum_density: p grid too small");
  const double dp = p_grid[1] - p_grid[0];
  return pushforward_density(state, p_grid, dp);
}

MomentumDensity classical_momentum_density(const FieldState& state, int bins) {
  const int n = state.rho.size();
  if (bins <= 0) bins = std::max(8, n / 4);
  const SampledField g = momentum_field(state);
  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(state.rho, &gap);
  double lo = g[sup.lo], hi = g[sup.lo];
  for (int k = sup.lo; k <= sup.hi; ++k) {
    lo = std::min(lo, g[k]);
    hi = std::max(hi, g[k]);
  }
  const double g_scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  std::vector<double> grid(static_cast<std::size_t>(bins));
  double dp = 0.0;
  if (hi - lo < 1e-6 * g_scale) {
    // constant momentum field: build bins with the constant value centered
    dp = g_scale / bins;
    const double mid = 0.5 * (lo + hi);
    for (int b = 0; b < bins; ++b)
      grid[static_cast<std::size_t>(b)] = mid + (b - bins / 2) * dp;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    dp = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) grid[static_cast<std::size_t>(b)] = lo + (b + 0.5) * dp;
  }
  return pushforward_density(state, std::move(grid), dp);
}

HDiagnostic h_diagnostic(const FieldState& state, double s_const) {
  const WaveFunction psi = to_wavefunction(state, s_const);
  const MomentumDensity wq = quantum_momentum_density(fourier_forward(psi));
  const MomentumDensity wc = classical_momentum_density(state, wq.p);

  HDiagnostic out;
  out.p = wq.p;
  out.dp = wq.dp;
  out.h.resize(wq.w.size());
  for (std::size_t i = 0; i < wq.w.size(); ++i) out.h[i] = wc.w[i] - wq.w[i];
  for (int k = 0; k < 3; ++k)
    out.moments[static_cast<std::size_t>(k)] =
        wc.moments[static_cast<std::size_t>(k)] - wq.moments[static_cast<std::size_t>(k)];
  return out;
}

double kinetic_expectation(const WaveFunction& psi, double mass) {
  const MomentumSpectrum phi = fourier_forward(psi);
  double t = 0.0;
  for (std::size_t i = 0; i < phi.phi.size(); ++i) {
    const double p = phi.p[i];
    t += std::norm(phi.phi[i]) / phi.s_const * p * p;
  }
  return t * phi.dp / (2.0 * mass);
}

KineticSplit kinetic_split(const FieldState& state, double mass, double s_const) {
  KineticSplit ks;
  const SampledField g = momentum_field(state);
  double g2 = 0.0;
  for (int k = 0; k < state.rho.size(); ++k) g2 += state.rho[k] * g[k] * g[k];
  g2 *= state.rho.grid.dx();
  ks.gradient_part = g2 / (2.0 * mass);
  ks.fisher_part = s_const * s_const / (8.0 * mass) * fisher_information(state.rho);
  ks.total = ks.gradient_part + ks.fisher_part;
  return ks;
}

double density_moment(const MomentumDensity& w, int k) {
  double m = 0.0;
  for (std::size_t i = 0; i < w.w.size(); ++i) m += w.w[i] * std::pow(w.p[i], k);
  return m * w.dp;
}

}  // namespace statfield
