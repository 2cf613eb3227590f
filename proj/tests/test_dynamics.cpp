#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "statfield/dynamics.hpp"

using namespace statfield;

namespace {

SampledField harmonic_potential(const GridSpec& g, double mass, double omega) {
  SampledField V(g);
  for (int k = 0; k < g.n; ++k) V[k] = 0.5 * mass * omega * omega * g.x(k) * g.x(k);
  return V;
}

}  // namespace

TEST_CASE("rhs: classical free gaussian with linear phase") {
  const GridSpec g(-10.0, 10.0, 1024);
  const double p0 = 0.8, m = 1.3, sigma = 1.0;
  const FieldState st = gaussian_state(g, 0.0, sigma, p0);
  const SampledField V(g);
  const StateDerivative d = rhs(st, CouplingSpec::classical(), V, {m, DerivScheme::Spectral});

  // drho/dt = -(p0/m) rho', dS/dt = -p0^2/(2m)
  for (int k = 0; k < g.n; ++k) {
    const double x = g.x(k);
    const double rho_prime = -x / (sigma * sigma) * st.rho[k];
    CHECK(std::abs(d.drho_dt[k] + p0 / m * rho_prime) < 1e-8);
    CHECK(d.ds_dt[k] == doctest::Approx(-p0 * p0 / (2.0 * m)).epsilon(1e-10));
  }
}

TEST_CASE("rhs: quantum HO ground state is stationary with dS/dt = -hbar w/2") {
  const GridSpec g(-10.0, 10.0, 1024);
  const double m = 1.0, omega = 1.0, hbar = 1.0;
  const FieldState st = ho_ground_state(g, m, omega, hbar);
  const SampledField V = harmonic_potential(g, m, omega);
  const StateDerivative d =
      rhs(st, CouplingSpec::quantum(hbar, m), V, {m, DerivScheme::Spectral});

  const SupportRange sup = above_floor_range(st.rho);
  for (int k = 0; k < g.n; ++k) {
    CHECK(std::abs(d.drho_dt[k]) < 1e-10);
    if (st.rho[k] > 1e-9 * max_abs(st.rho))
      CHECK(d.ds_dt[k] == doctest::Approx(-0.5 * hbar * omega).epsilon(1e-7));
  }
  (void)sup;
}

TEST_CASE("rhs conserves total probability in divergence form") {
  const GridSpec g(-12.0, 12.0, 1024);
  std::mt19937_64 rng(55);
  const FieldState st = oracles::random_smooth_state(g, rng);
  const SampledField V = harmonic_potential(g, 1.0, 0.7);
  for (auto coupling : {CouplingSpec::classical(), CouplingSpec::power_law(2, 0.4)}) {
    const StateDerivative d = rhs(st, coupling, V, {});
    CHECK(std::abs(integrate(d.drho_dt)) < 1e-10);
  }
}

TEST_CASE("step_rk4 basics") {
  const GridSpec g(-10.0, 10.0, 512);
  const double m = 1.0;

  SUBCASE("dt = 0 is the identity") {
    EvolutionConfig cfg;
    cfg.dt = 0.0;
    cfg.potential = SampledField(g);
    cfg.mass = m;
    const FieldState st = gaussian_state(g, 0.0, 1.0, 0.5);
    const FieldState out = step_rk4(st, cfg);
    for (int k = 0; k < g.n; ++k) {
      CHECK(out.rho[k] == st.rho[k]);
      CHECK(out.s_phase[k] == st.s_phase[k]);
    }
  }

  SUBCASE("constant V only shifts dS/dt by -V dt") {
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.potential = SampledField(g, 2.5);
    cfg.mass = m;
    const FieldState st = gaussian_state(g, 0.0, 1.0, 0.0);
    const FieldState out = step_rk4(st, cfg);
    for (int k = 0; k < g.n; ++k) {
      CHECK(out.rho[k] == doctest::Approx(st.rho[k]).epsilon(1e-12));
      CHECK(out.s_phase[k] ==
            doctest::Approx(st.s_phase[k] - 2.5 * cfg.dt).epsilon(1e-10));
    }
  }

  SUBCASE("free classical advection matches the characteristics shift") {
    const double p0 = 0.9, dt = 1e-3;
    EvolutionConfig cfg;
    cfg.dt = dt;
    cfg.potential = SampledField(g);
    cfg.mass = m;
    cfg.renormalize = false;
    const FieldState st = gaussian_state(g, 0.0, 1.0, p0);
    const FieldState out = step_rk4(st, cfg);
    for (int k = 2; k + 2 < g.n; ++k) {
      const double want = oracles::gaussian_pdf(g.x(k) - p0 / m * dt, 0.0, 1.0);
      CHECK(std::abs(out.rho[k] - want) < 1e-8);  // O(dt^5 + roundoff)
    }
  }
}

TEST_CASE("split step: free gaussian width law") {
  const GridSpec g(-16.0, 16.0, 1024);
  const double s = 1.0, m = 1.0, sigma0 = 1.0;
  WaveFunction psi = to_wavefunction(gaussian_state(g, 0.0, sigma0, 0.0), s);
  const SampledField V(g);
  const double dt = 2e-3;
  const int steps = 500;  // t = 1
  for (int i = 0; i < steps; ++i) psi = split_step_schrodinger(psi, V, dt, m);

  // V = 0: splitting is exact, so the width law holds to spectral accuracy
  const double t = dt * steps;
  const double sig_t = oracles::free_packet_sigma(sigma0, t, s, m);
  double var = 0.0;
  for (int k = 0; k < g.n; ++k)
    var += std::norm(psi.values[static_cast<std::size_t>(k)]) * g.x(k) * g.x(k);
  var *= g.dx();
  CHECK(std::sqrt(var) == doctest::Approx(sig_t).epsilon(1e-10));
  for (int k = 0; k < g.n; ++k) {
    const double want = oracles::free_packet_density(g.x(k), t, 0.0, sigma0, 0.0, s, m);
    CHECK(std::abs(std::norm(psi.values[static_cast<std::size_t>(k)]) - want) < 1e-10);
  }
}

TEST_CASE("split step: harmonic ground state picks up the e^{-i w t/2} phase") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double s = 1.0, m = 1.0, omega = 1.0;
  const WaveFunction psi0 = to_wavefunction(ho_ground_state(g, m, omega, s), s);
  const SampledField V = harmonic_potential(g, m, omega);
  WaveFunction psi = psi0;
  const double dt = 1e-4;
  const int steps = 5000;  // t = 0.5
  for (int i = 0; i < steps; ++i) psi = split_step_schrodinger(psi, V, dt, m);
  const double t = dt * steps;
  const Complex phase = std::polar(1.0, -0.5 * omega * t);
  for (int k = 0; k < g.n; ++k) {
    const Complex want = psi0.values[static_cast<std::size_t>(k)] * phase;
    CHECK(std::abs(psi.values[static_cast<std::size_t>(k)] - want) < 1e-7);
  }
}

TEST_CASE("split step: unitarity over 1e4 steps and time reversal") {
  const GridSpec g(-12.0, 12.0, 512);
  const double s = 1.0, m = 1.0;
  const SampledField V = harmonic_potential(g, m, 1.0);
  WaveFunction psi = to_wavefunction(gaussian_state(g, 0.5, 0.8, 0.3), s);

  SUBCASE("norm is preserved to 1e-12") {
    WaveFunction cur = psi;
    for (int i = 0; i < 10000; ++i) cur = split_step_schrodinger(cur, V, 1e-4, m);
    CHECK(std::abs(cur.norm() - 1.0) < 1e-12);
  }

  SUBCASE("dt then -dt returns psi to 1e-12") {
    WaveFunction fwd = split_step_schrodinger(psi, V, 1e-3, m);
    WaveFunction back = split_step_schrodinger(fwd, V, -1e-3, m);
    for (int k = 0; k < g.n; ++k)
      CHECK(std::abs(back.values[static_cast<std::size_t>(k)] -
                     psi.values[static_cast<std::size_t>(k)]) < 1e-12);
  }
}

TEST_CASE("evolve: t_final = 0 returns the initial snapshot only") {
  const GridSpec g(-10.0, 10.0, 256);
  EvolutionConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0.0;
  cfg.potential = SampledField(g);
  const FieldState st = gaussian_state(g, 0.0, 1.0, 0.0);
  const Trajectory traj = evolve(st, cfg);
  CHECK(traj.snapshots.size() == 1);
  CHECK(traj.snapshots[0].t == 0.0);
}

TEST_CASE("evolve: classical coupling with constant force integrates p exactly") {
  const GridSpec g(-14.0, 14.0, 1024);
  const double F = 0.4, m = 1.0, T = 1.0;
  EvolutionConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = T;
  cfg.record_every = 50;
  cfg.mass = m;
  cfg.potential = SampledField(g);
  for (int k = 0; k < g.n; ++k) cfg.potential[k] = -F * g.x(k);
  const FieldState st = gaussian_state(g, -2.0, 1.0, 0.0);
  const Trajectory traj = evolve(st, cfg);

  const auto recs = traj.records();
  CHECK(recs.back().p_mean - recs.front().p_mean == doctest::Approx(F * T).epsilon(1e-6));
  // Ehrenfest residuals vanish to discretization accuracy
  for (const auto& r : recs) {
    CHECK(std::abs(r.ehrenfest_r1) < 1e-6);
    CHECK(std::abs(r.ehrenfest_r2) < 1e-6);
  }
  CHECK(std::abs(integrate(traj.snapshots.back().state.rho) - 1.0) < 1e-10);
}

TEST_CASE("evolve: classical coupling in a harmonic well before the caustic") {
  // Gaussian rho in harmonic V: the (rho,S) chart caustics at w t = pi/2;
  // Ehrenfest holds cleanly on a pre-caustic window.
  const GridSpec g(-14.0, 14.0, 1024);
  const double m = 1.0, omega = 1.0;
  EvolutionConfig cfg;
  cfg.dt = 2.5e-4;
  cfg.t_final = 1.2;
  cfg.record_every = 60;
  cfg.mass = m;
  cfg.potential = harmonic_potential(g, m, omega);
  cfg.coupling = CouplingSpec::classical();
  const FieldState st = gaussian_state(g, 0.5, 1.0, 0.0);
  const Trajectory traj = evolve(st, cfg);
  double p_scale = 0.0, f_scale = 0.0;
  for (const auto& r : traj.records()) {
    p_scale = std::max(p_scale, std::abs(r.p_mean) / m);
    f_scale = std::max(f_scale, std::abs(r.F_mean));
  }
  for (const auto& r : traj.records()) {
    CHECK(std::abs(r.ehrenfest_r1) <= 1e-5 * p_scale);
    CHECK(std::abs(r.ehrenfest_r2) <= 1e-5 * f_scale);
  }
  // x follows the classical oscillation mu cos(w t)
  const auto& last = traj.records().back();
  CHECK(last.x_mean == doctest::Approx(0.5 * std::cos(omega * 1.2)).epsilon(1e-5));
}

TEST_CASE("evolve: quantum rk4 matches split step on a free gaussian (short horizon)") {
  const GridSpec g(-10.0, 10.0, 1024);
  const double s = 1.0, m = 1.0;
  const FieldState st = gaussian_state(g, 0.0, 1.0, 0.0);

  EvolutionConfig rk;
  rk.scheme = Scheme::Rk4;
  rk.coupling = CouplingSpec::quantum(s, m);
  rk.potential = SampledField(g);
  rk.mass = m;
  rk.s_const = s;
  rk.dt = 5e-5;
  rk.t_final = 0.1;
  rk.record_every = 2000;

  EvolutionConfig sp = rk;
  sp.scheme = Scheme::SplitStep;
  sp.dt = 1e-4;
  sp.record_every = 1000;

  const Trajectory tr_rk = evolve(st, rk);
  const Trajectory tr_sp = evolve(st, sp);
  REQUIRE(tr_rk.snapshots.size() == tr_sp.snapshots.size());

  const SampledField& rho_rk = tr_rk.snapshots.back().state.rho;
  const SampledField& rho_sp = tr_sp.snapshots.back().state.rho;
  double linf = 0.0;
  for (int k = 0; k < g.n; ++k) linf = std::max(linf, std::abs(rho_rk[k] - rho_sp[k]));
  CHECK(linf < 1e-4);
}

TEST_CASE("energy balance residual") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double s = 1.0, m = 1.0;

  SUBCASE("quantum coupling: r(t) vanishes identically") {
    EvolutionConfig cfg;
    cfg.scheme = Scheme::SplitStep;
    cfg.coupling = CouplingSpec::quantum(s, m);
    cfg.potential = harmonic_potential(g, m, 1.0);
    cfg.mass = m;
    cfg.s_const = s;
    cfg.dt = 1e-3;
    cfg.t_final = 0.2;
    cfg.record_every = 40;
    const Trajectory traj = evolve(gaussian_state(g, 0.4, 0.9, 0.0), cfg);
    const std::vector<double> r = energy_balance_residual(traj, cfg);
    const double e_scale = std::abs(traj.records().front().E_mean);
    for (double v : r) CHECK(std::abs(v) <= 1e-8 * e_scale);
  }

  SUBCASE("power law n=2 with the h=0 rule drifts, consistently with r(t)") {
    EvolutionConfig cfg;
    cfg.scheme = Scheme::Rk4;
    cfg.coupling = CouplingSpec::power_law(2, 0.5);
    cfg.potential = SampledField(g);
    cfg.mass = m;
    cfg.s_const = s;
    cfg.momentum_rule = MomentumRule::Quantum;
    cfg.dt = 2e-4;
    cfg.t_final = 1.5;
    cfg.record_every = 250;
    const Trajectory traj = evolve(gaussian_state(g, 0.0, 1.0, 0.0), cfg);
    const auto recs = traj.records();
    const std::vector<double> r = energy_balance_residual(traj, cfg);

    const double e0 = recs.front().E_mean;
    const double drift = std::abs(recs.back().E_mean - e0) / std::abs(e0);
    CHECK(drift > 1e-4);

    // r(t) (quadrature) tracks dE/dt (finite differences) to 10%
    std::vector<double> t(recs.size()), e(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      t[i] = recs[i].t;
      e[i] = recs[i].E_mean;
    }
    const std::vector<double> dedt = differentiate_series(t, e);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (std::abs(dedt[i]) < 1e-4) continue;
      CHECK(std::abs(r[i] - dedt[i]) <= 0.10 * std::abs(dedt[i]));
    }
  }
}

TEST_CASE("evolve rejects inconsistent configs") {
  const GridSpec g(-10.0, 10.0, 256);
  const FieldState st = gaussian_state(g, 0.0, 1.0, 0.0);
  EvolutionConfig cfg;
  cfg.potential = SampledField(g);

  SUBCASE("split step needs the quantum coupling") {
    cfg.scheme = Scheme::SplitStep;
    cfg.coupling = CouplingSpec::classical();
    CHECK_THROWS_AS(evolve(st, cfg), ConfigError);
  }
  SUBCASE("split step needs s_const = hbar_eff") {
    cfg.scheme = Scheme::SplitStep;
    cfg.coupling = CouplingSpec::quantum(0.5, 1.0);
    cfg.s_const = 1.0;
    CHECK_THROWS_AS(evolve(st, cfg), ConfigError);
  }
  SUBCASE("t_final must be a multiple of dt") {
    cfg.dt = 3e-3;
    cfg.t_final = 1e-2;
    CHECK_THROWS_AS(evolve(st, cfg), ConfigError);
  }
}
