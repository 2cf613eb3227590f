#ifndef STATFIELD_DYNAMICS_HPP
#define STATFIELD_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "statfield/coupling.hpp"
#include "statfield/observables.hpp"

namespace statfield {

enum class Scheme { Rk4, SplitStep };

struct EvolutionConfig {
  double dt = 1e-3;
  double t_final = 1.0;
  int record_every = 1;
  Scheme scheme = Scheme::Rk4;
  SampledField potential;
  CouplingSpec coupling = CouplingSpec::classical();
  double mass = 1.0;
  double s_const = 1.0;
  bool renormalize = true;
  double norm_tol = 1e-8;
  double overflow_guard = 1e9;
  MomentumRule momentum_rule = MomentumRule::Auto;
  DerivScheme density_scheme = DerivScheme::Spectral;
};

/// Continuity + generalized Hamilton-Jacobi right-hand side:
///   drho/dt = -(rho S'/m)',   dS/dt = L0(rho) - (S')^2/2m - V.
/// S' by central differences (S need not decay); density derivatives by the
/// given scheme. Sub-floor tails carry L0 = 0; interior sub-floor points
/// raise NodeError.
struct StateDerivative {
  SampledField drho_dt;
  SampledField ds_dt;
};

struct RhsOptions {
  double mass = 1.0;
  DerivScheme density_scheme = DerivScheme::Spectral;
};

StateDerivative rhs(const FieldState& state, const CouplingSpec& coupling,
                    const SampledField& V, const RhsOptions& opts = {});

/// One classical RK4 step of the (rho, S) system. Checks overflow and
/// per-step norm drift; renormalizes when cfg.renormalize is set.
FieldState step_rk4(const FieldState& state, const EvolutionConfig& cfg);

/// One Strang-split step exp(-iV dt/2s) F^-1 exp(-i s k^2 dt/2m) F exp(-iV dt/2s).
WaveFunction split_step_schrodinger(const WaveFunction& psi, const SampledField& V,
                                    double dt, double mass);

struct Snapshot {
  double t = 0.0;
  FieldState state;
  bool state_valid = true;           // false if the (rho,S) view hit a node
  std::optional<WaveFunction> psi;   // present for split-step trajectories
  ObservableRecord obs;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  long long steps_taken = 0;
  double accumulated_norm_drift = 0.0;  // sum of per-step |d norm|, pre-renormalization
  std::vector<std::string> warnings;

  std::vector<ObservableRecord> records() const;
};

/// Steps the initial state to t_final, recording observables every
/// record_every steps (t_final must be a multiple of record_every*dt).
/// For scheme = SplitStep the initial state is mapped to psi once and the
/// (rho,S) view is maintained where node-free.
Trajectory evolve(const FieldState& initial, const EvolutionConfig& cfg);

/// r(t) = int [ L0(rho) - (s^2/2m)(sqrt rho)''/sqrt rho ] drho/dt dx per
/// snapshot, with drho/dt from the analytic right-hand side. Vanishes
/// identically for the Quantum coupling with hbar_eff = s_const; equals
/// dE/dt under the h = 0 expectation rule for any coupling.
std::vector<double> energy_balance_residual(const Trajectory& traj,
                                            const EvolutionConfig& cfg);

/// Stability guideline for RK4 with the Quantum coupling.
double rk4_quantum_dt_limit(const GridSpec& grid, double mass, double s_const);

/// Effective T-bar rule after resolving MomentumRule::Auto.
MomentumRule resolve_momentum_rule(MomentumRule rule, const CouplingSpec& coupling);

}  // namespace statfield

#endif
