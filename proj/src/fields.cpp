#include "statfield/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "statfield/coupling.hpp"
#include "statfield/dynamics.hpp"

namespace statfield {

double WaveFunction::norm() const {
  double s = 0.0;
  for (const Complex& v : values) s += std::norm(v);
  return s * grid.dx();
}

WaveFunction to_wavefunction(const FieldState& state, double s_const) {
  if (!(state.rho.grid == state.s_phase.grid))
    throw ConfigError("to_wavefunction: rho and S on different grids");
  WaveFunction psi;
  psi.grid = state.rho.grid;
  psi.t = state.t;
  psi.s_const = s_const;
  psi.values.resize(static_cast<std::size_t>(psi.grid.n));
  for (int k = 0; k < psi.grid.n; ++k) {
    const double amp = std::sqrt(std::max(state.rho[k], 0.0));
    const double phase = state.s_phase[k] / s_const;
    psi.values[static_cast<std::size_t>(k)] = std::polar(amp, phase);
  }
  return psi;
}

FieldState from_wavefunction(const WaveFunction& psi, UnwrapPolicy policy) {
  const int n = psi.size();
  FieldState state;
  state.t = psi.t;
  state.rho = SampledField(psi.grid);
  state.s_phase = SampledField(psi.grid);
  for (int k = 0; k < n; ++k) state.rho[k] = std::norm(psi.values[static_cast<std::size_t>(k)]);

  // Phase is defined only on the connected above-floor region; a disconnected
  // region means the unwrap path would cross a node.
  const SupportRange sup = above_floor_range(state.rho);

  const double theta0 = std::arg(psi.values[static_cast<std::size_t>(sup.lo)]);
  double s_acc = (policy == UnwrapPolicy::PrincipalAnchor) ? psi.s_const * theta0 : 0.0;
  state.s_phase[sup.lo] = s_acc;
  double prev_theta = theta0;
  for (int k = sup.lo + 1; k <= sup.hi; ++k) {
    const double theta = std::arg(psi.values[static_cast<std::size_t>(k)]);
    double dtheta = theta - prev_theta;
    // wrap increment into (-pi, pi]
    dtheta -= 2.0 * std::numbers::pi * std::floor((dtheta + std::numbers::pi) /
                                                  (2.0 * std::numbers::pi));
    s_acc += psi.s_const * dtheta;
    state.s_phase[k] = s_acc;
    prev_theta = theta;
  }
  // Constant extension into the sub-floor tails (everything downstream is
  // rho-weighted there).
  for (int k = 0; k < sup.lo; ++k) state.s_phase[k] = state.s_phase[sup.lo];
  for (int k = sup.hi + 1; k < n; ++k) state.s_phase[k] = state.s_phase[sup.hi];
  return state;
}

DecayReport check_decay(const FieldState& state, const SampledField& V,
                        const CouplingSpec* coupling, const DecayCheckOptions& opts) {
  const int n = state.rho.size();
  const int edge = std::max(1, static_cast<int>(std::ceil(opts.edge_fraction * n)));

  const CouplingSpec classical = CouplingSpec::classical();
  const CouplingSpec& spec = coupling ? *coupling : classical;

  RhsOptions rhs_opts;
  rhs_opts.mass = opts.mass;
  const StateDerivative d = rhs(state, spec, V, rhs_opts);

  const SampledField s_prime = derivative(state.s_phase, 1, DerivScheme::Central);
  const auto xs = state.rho.grid.points();

  std::vector<std::pair<std::string, std::vector<double>>> factors;
  factors.emplace_back("1", std::vector<double>(static_cast<std::size_t>(n), 1.0));
  factors.emplace_back("V", V.values);
  factors.emplace_back("dS/dt", d.ds_dt.values);
  {
    std::vector<double> xsp(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      xsp[static_cast<std::size_t>(k)] = xs[static_cast<std::size_t>(k)] * s_prime[k];
    factors.emplace_back("x*S'", std::move(xsp));
  }
  {
    std::vector<double> sp2(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) sp2[static_cast<std::size_t>(k)] = s_prime[k] * s_prime[k];
    factors.emplace_back("(S')^2", std::move(sp2));
  }

  DecayReport report;
  report.decay_tol = opts.decay_tol;
  report.pass = true;
  for (auto& [name, vals] : factors) {
    double m = 0.0;
    for (int k = 0; k < edge; ++k) {
      m = std::max(m, std::abs(state.rho[k] * vals[static_cast<std::size_t>(k)]));
      const int r = n - 1 - k;
      m = std::max(m, std::abs(state.rho[r] * vals[static_cast<std::size_t>(r)]));
    }
    const bool pass = m <= opts.decay_tol;
    report.entries.push_back({name, m, pass});
    report.pass = report.pass && pass;
  }
  return report;
}

SampledField gaussian_density(const GridSpec& g, double mu, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("gaussian_density: sigma must be positive");
  SampledField rho(g);
  const double c = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  for (int k = 0; k < g.n; ++k) {
    const double z = (g.x(k) - mu) / sigma;
    rho[k] = c * std::exp(-0.5 * z * z);
  }
  normalize_density(rho);
  return rho;
}

FieldState gaussian_state(const GridSpec& g, double mu, double sigma, double p0) {
  FieldState st;
  st.rho = gaussian_density(g, mu, sigma);
  st.s_phase = SampledField(g);
  for (int k = 0; k < g.n; ++k) st.s_phase[k] = p0 * g.x(k);
  return st;
}

FieldState ho_ground_state(const GridSpec& g, double mass, double omega, double s_const) {
  const double sigma = std::sqrt(s_const / (2.0 * mass * omega));
  return gaussian_state(g, 0.0, sigma, 0.0);
}

}  // namespace statfield
