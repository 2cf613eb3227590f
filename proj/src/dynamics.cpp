#include "statfield/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "statfield/fft.hpp"

namespace statfield {

StateDerivative rhs(const FieldState& state, const CouplingSpec& coupling,
                    const SampledField& V, const RhsOptions& opts) {
  const int n = state.rho.size();
  const double m = opts.mass;

  CouplingEvalOptions copts;
  copts.scheme = opts.density_scheme;
  copts.require_interior_defined = true;
  CouplingEval ce;
  try {
    ce = eval_L0(coupling, state.rho, copts);
  } catch (const NumericError& e) {
    throw node_error("coupling undefined at t = " + std::to_string(state.t) + " (" +
                     e.what() + ")");
  }

  const SampledField s_prime = derivative(state.s_phase, 1, DerivScheme::Central);
  SampledField flux(state.rho.grid);
  for (int k = 0; k < n; ++k) flux[k] = state.rho[k] * s_prime[k] / m;

  StateDerivative d;
  d.drho_dt = derivative(flux, 1, opts.density_scheme);
  for (double& v : d.drho_dt.values) v = -v;
  d.ds_dt = SampledField(state.rho.grid);
  for (int k = 0; k < n; ++k)
    d.ds_dt[k] = ce.L0[k] - s_prime[k] * s_prime[k] / (2.0 * m) - V[k];
  return d;
}

namespace {

void check_guards(const FieldState& state, double guard) {
  if (!all_finite(state.rho.values) || !all_finite(state.s_phase.values))
    throw blow_up("non-finite field values at t = " + std::to_string(state.t));
  if (max_abs(state.rho) > guard || max_abs(state.s_phase) > guard)
    throw blow_up("field magnitude exceeds overflow guard at t = " + std::to_string(state.t) +
                  " (reduce dt)");
}

FieldState axpy_state(const FieldState& y, double a, const StateDerivative& d) {
  FieldState out = y;
  for (int k = 0; k < y.rho.size(); ++k) {
    out.rho[k] = y.rho[k] + a * d.drho_dt[k];
    out.s_phase[k] = y.s_phase[k] + a * d.ds_dt[k];
  }
  return out;
}

}  // namespace

FieldState step_rk4(const FieldState& state, const EvolutionConfig& cfg) {
  if (cfg.dt == 0.0) return state;
  RhsOptions opts{cfg.mass, cfg.density_scheme};
  const double dt = cfg.dt;

  const StateDerivative k1 = rhs(state, cfg.coupling, cfg.potential, opts);
  FieldState s2 = axpy_state(state, 0.5 * dt, k1);
  s2.t = state.t + 0.5 * dt;
  const StateDerivative k2 = rhs(s2, cfg.coupling, cfg.potential, opts);
  FieldState s3 = axpy_state(state, 0.5 * dt, k2);
  s3.t = state.t + 0.5 * dt;
  const StateDerivative k3 = rhs(s3, cfg.coupling, cfg.potential, opts);
  FieldState s4 = axpy_state(state, dt, k3);
  s4.t = state.t + dt;
  const StateDerivative k4 = rhs(s4, cfg.coupling, cfg.potential, opts);

  FieldState out = state;
  out.t = state.t + dt;
  const double c = dt / 6.0;
  for (int k = 0; k < state.rho.size(); ++k) {
    out.rho[k] = state.rho[k] + c * (k1.drho_dt[k] + 2.0 * k2.drho_dt[k] +
                                     2.0 * k3.drho_dt[k] + k4.drho_dt[k]);
    out.s_phase[k] = state.s_phase[k] + c * (k1.ds_dt[k] + 2.0 * k2.ds_dt[k] +
                                             2.0 * k3.ds_dt[k] + k4.ds_dt[k]);
  }
  check_guards(out, cfg.overflow_guard);
  return out;
}

WaveFunction split_step_schrodinger(const WaveFunction& psi, const SampledField& V,
                                    double dt, double mass) {
  const int n = psi.size();
  const double s = psi.s_const;
  WaveFunction out = psi;
  out.t = psi.t + dt;

  for (int k = 0; k < n; ++k)
    out.values[static_cast<std::size_t>(k)] *= std::polar(1.0, -V[k] * dt / (2.0 * s));

  fft::forward(out.values);
  const double k0 = 2.0 * std::numbers::pi / (n * psi.grid.dx());
  for (int j = 0; j < n; ++j) {
    const int jt = (j <= n / 2) ? j : j - n;
    const double kappa = k0 * jt;
    out.values[static_cast<std::size_t>(j)] *=
        std::polar(1.0, -s * kappa * kappa * dt / (2.0 * mass));
  }
  fft::inverse(out.values);

  for (int k = 0; k < n; ++k)
    out.values[static_cast<std::size_t>(k)] *= std::polar(1.0, -V[k] * dt / (2.0 * s));
  return out;
}

std::vector<ObservableRecord> Trajectory::records() const {
  std::vector<ObservableRecord> out;
  out.reserve(snapshots.size());
  for (const auto& s : snapshots) out.push_back(s.obs);
  return out;
}

MomentumRule resolve_momentum_rule(MomentumRule rule, const CouplingSpec& coupling) {
  if (rule != MomentumRule::Auto) return rule;
  return coupling.kind() == CouplingKind::Classical ? MomentumRule::Hybrid
                                                    : MomentumRule::Quantum;
}

double rk4_quantum_dt_limit(const GridSpec& grid, double mass, double s_const) {
  return 0.2 * mass * grid.dx() * grid.dx() / s_const;
}

namespace {

long long resolve_steps(double t_final, double dt) {
  if (t_final < 0.0 || dt <= 0.0) throw ConfigError("evolve: need t_final >= 0 and dt > 0");
  const long long n = std::llround(t_final / dt);
  if (std::abs(n * dt - t_final) > 1e-6 * std::max(1.0, std::abs(t_final)))
    throw ConfigError("evolve: t_final must be an integer multiple of dt");
  return n;
}

}  // namespace

Trajectory evolve(const FieldState& initial, const EvolutionConfig& cfg) {
  if (!(cfg.potential.grid == initial.rho.grid))
    throw ConfigError("evolve: potential grid does not match the state grid");
  if (cfg.record_every < 1) throw ConfigError("evolve: record_every must be >= 1");
  const long long n_steps = resolve_steps(cfg.t_final, cfg.dt);
  if (n_steps % cfg.record_every != 0)
    throw ConfigError("evolve: step count must be a multiple of record_every");

  Trajectory traj;
  RecordContext ctx;
  ctx.potential = &cfg.potential;
  ctx.mass = cfg.mass;
  ctx.s_const = cfg.s_const;
  ctx.rule = resolve_momentum_rule(cfg.momentum_rule, cfg.coupling);

  if (cfg.scheme == Scheme::SplitStep) {
    if (cfg.coupling.kind() != CouplingKind::Quantum)
      throw ConfigError("split_step is only valid with the quantum coupling");
    if (std::abs(cfg.coupling.hbar_eff() - cfg.s_const) >
        1e-12 * std::max(1.0, std::abs(cfg.s_const)))
      throw ConfigError("split_step requires s_const = hbar_eff");
  }
  if (cfg.coupling.kind() == CouplingKind::Quantum &&
      std::abs(cfg.coupling.mass() - cfg.mass) > 1e-12 * std::max(1.0, cfg.mass))
    throw ConfigError("quantum coupling mass must equal the evolution mass");
  if (cfg.scheme == Scheme::Rk4 && cfg.coupling.kind() == CouplingKind::Quantum) {
    const double lim = rk4_quantum_dt_limit(initial.rho.grid, cfg.mass, cfg.s_const);
    if (cfg.dt > lim)
      traj.warnings.push_back("dt = " + std::to_string(cfg.dt) +
                              " exceeds the rk4 quantum stability guideline " +
                              std::to_string(lim));
  }

  auto snap_state = [&](const FieldState& st) {
    Snapshot s;
    s.t = st.t;
    s.state = st;
    s.obs = make_record(st, ctx);
    traj.snapshots.push_back(std::move(s));
  };
  auto snap_psi = [&](const WaveFunction& psi) {
    Snapshot s;
    s.t = psi.t;
    s.psi = psi;
    try {
      s.state = from_wavefunction(psi);
      s.state_valid = true;
    } catch (const NumericError&) {
      s.state_valid = false;
      s.state.t = psi.t;
      s.state.rho = SampledField(psi.grid);
      for (int k = 0; k < psi.size(); ++k)
        s.state.rho[k] = std::norm(psi.values[static_cast<std::size_t>(k)]);
      s.state.s_phase = SampledField(psi.grid);
    }
    s.obs = make_record(psi, ctx);
    traj.snapshots.push_back(std::move(s));
  };

  if (cfg.scheme == Scheme::Rk4) {
    FieldState st = initial;
    snap_state(st);
    for (long long i = 1; i <= n_steps; ++i) {
      const double norm_before = integrate(st.rho);
      st = step_rk4(st, cfg);
      const double norm_after = integrate(st.rho);
      const double drift = std::abs(norm_after - norm_before);
      traj.accumulated_norm_drift += drift;
      if (drift > cfg.norm_tol)
        throw norm_drift("per-step norm drift " + std::to_string(drift) + " at t = " +
                         std::to_string(st.t));
      if (cfg.renormalize)
        for (double& v : st.rho.values) v /= norm_after;
      ++traj.steps_taken;
      if (i % cfg.record_every == 0) snap_state(st);
    }
  } else {
    WaveFunction psi = to_wavefunction(initial, cfg.s_const);
    snap_psi(psi);
    for (long long i = 1; i <= n_steps; ++i) {
      const double norm_before = psi.norm();
      psi = split_step_schrodinger(psi, cfg.potential, cfg.dt, cfg.mass);
      traj.accumulated_norm_drift += std::abs(psi.norm() - norm_before);
      ++traj.steps_taken;
      if (i % cfg.record_every == 0) snap_psi(psi);
    }
  }

  // Ehrenfest residuals need the full series.
  if (traj.snapshots.size() >= 5) {
    std::vector<ObservableRecord> recs = traj.records();
    auto [r1, r2] = ehrenfest_residuals(recs, cfg.mass);
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
      traj.snapshots[i].obs.ehrenfest_r1 = r1[i];
      traj.snapshots[i].obs.ehrenfest_r2 = r2[i];
    }
  }
  return traj;
}

std::vector<double> energy_balance_residual(const Trajectory& traj,
                                            const EvolutionConfig& cfg) {
  if (traj.snapshots.size() < 3)
    throw ConfigError("energy_balance_residual: need at least 3 snapshots");

  // Reference quantum term evaluated through the same code path as the
  // coupling so that the Quantum-coupling bracket cancels exactly.
  const CouplingSpec quantum_ref = CouplingSpec::quantum(cfg.s_const, cfg.mass);
  CouplingEvalOptions copts;
  copts.scheme = cfg.density_scheme;
  copts.require_interior_defined = true;

  std::vector<double> out;
  out.reserve(traj.snapshots.size());
  for (const auto& snap : traj.snapshots) {
    if (!snap.state_valid)
      throw node_error("energy_balance_residual: snapshot at t = " + std::to_string(snap.t) +
                       " has no (rho,S) view");
    const CouplingEval ce = eval_L0(cfg.coupling, snap.state.rho, copts);
    const CouplingEval cq = eval_L0(quantum_ref, snap.state.rho, copts);
    const StateDerivative d =
        rhs(snap.state, cfg.coupling, cfg.potential, {cfg.mass, cfg.density_scheme});
    double r = 0.0;
    for (int k = 0; k < snap.state.rho.size(); ++k)
      r += (ce.L0[k] - cq.L0[k]) * d.drho_dt[k];
    out.push_back(r * snap.state.rho.grid.dx());
  }
  return out;
}

}  // namespace statfield
