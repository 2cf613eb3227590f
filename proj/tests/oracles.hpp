// Test-side oracles: closed forms, random smooth states, and a
// method-of-characteristics ensemble for the classical theory. Everything in
// here is independent of the library's evolution/functional code paths.
#ifndef STATFIELD_TESTS_ORACLES_HPP
#define STATFIELD_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "statfield/fields.hpp"
#include "statfield/observables.hpp"

namespace oracles {

using statfield::FieldState;
using statfield::GridSpec;
using statfield::SampledField;

inline double gaussian_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

/// Quantum L0 of a Gaussian: (hbar^2/2m) (x^2/(4 sigma^4) - 1/(2 sigma^2)).
inline double quantum_L0_gaussian(double x, double sigma, double hbar, double mass) {
  return hbar * hbar / (2.0 * mass) *
         (x * x / (4.0 * sigma * sigma * sigma * sigma) - 1.0 / (2.0 * sigma * sigma));
}

/// Width of a free Gaussian packet: sigma(t)^2 = sigma0^2 (1 + (s t / 2 m sigma0^2)^2).
inline double free_packet_sigma(double sigma0, double t, double s, double mass) {
  const double a = s * t / (2.0 * mass * sigma0 * sigma0);
  return sigma0 * std::sqrt(1.0 + a * a);
}

/// |psi(x,t)|^2 of a free Gaussian packet with initial momentum p0.
inline double free_packet_density(double x, double t, double mu0, double sigma0, double p0,
                                  double s, double mass) {
  const double sig = free_packet_sigma(sigma0, t, s, mass);
  return gaussian_pdf(x, mu0 + p0 * t / mass, sig);
}

/// Random smooth node-free state: rho = exp(q) with a band-limited random q
/// on top of a Gaussian envelope; S band-limited plus a linear drift.
struct RandomStateOptions {
  double sigma = 1.2;        // envelope width
  double box_fraction = 0.5; // active region fraction of the box
  int modes = 4;
  double rho_amp = 0.35;
  double s_amp = 0.4;
  double p0_max = 0.8;
};

inline FieldState random_smooth_state(const GridSpec& g, std::mt19937_64& rng,
                                      const RandomStateOptions& opt = {}) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double L = (g.x_max - g.x_min) * opt.box_fraction;
  FieldState st;
  st.rho = SampledField(g);
  st.s_phase = SampledField(g);

  std::vector<double> aq(static_cast<std::size_t>(opt.modes)), pq(aq.size());
  std::vector<double> as(aq.size()), ps(aq.size());
  for (int j = 0; j < opt.modes; ++j) {
    aq[static_cast<std::size_t>(j)] = opt.rho_amp * (2.0 * uni(rng) - 1.0) / (j + 1);
    pq[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * uni(rng);
    as[static_cast<std::size_t>(j)] = opt.s_amp * (2.0 * uni(rng) - 1.0) / (j + 1);
    ps[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * uni(rng);
  }
  const double p0 = opt.p0_max * (2.0 * uni(rng) - 1.0);

  for (int k = 0; k < g.n; ++k) {
    const double x = g.x(k);
    double q = -0.5 * x * x / (opt.sigma * opt.sigma);
    double s = p0 * x;
    for (int j = 0; j < opt.modes; ++j) {
      const double w = 2.0 * std::numbers::pi * (j + 1) / L;
      q += aq[static_cast<std::size_t>(j)] * std::cos(w * x + pq[static_cast<std::size_t>(j)]);
      s += as[static_cast<std::size_t>(j)] * std::cos(w * x + ps[static_cast<std::size_t>(j)]);
    }
    st.rho[k] = std::exp(q);
    st.s_phase[k] = s;
  }
  statfield::normalize_density(st.rho);
  return st;
}

/// Weighted characteristics ensemble of the classical statistical theory:
/// samples (x_i, p_i = S'(x_i)) carrying fixed weights rho(x_i) dx, advanced
/// by RK4 on dx/dt = p/m, dp/dt = -V'(x). Observable averages exist for all
/// t, through caustics of the (rho,S) chart.
class CharacteristicsEnsemble {
public:
  CharacteristicsEnsemble(const FieldState& initial, std::function<double(double)> force,
                          double mass)
      : force_(std::move(force)), mass_(mass) {
    const GridSpec& g = initial.rho.grid;
    const statfield::SampledField sp =
        statfield::derivative(initial.s_phase, 1, statfield::DerivScheme::Central);
    for (int k = 0; k < g.n; ++k) {
      const double w = initial.rho[k] * g.dx();
      if (w <= 0.0) continue;
      x_.push_back(g.x(k));
      p_.push_back(sp[k]);
      w_.push_back(w);
    }
  }

  void advance(double dt, int steps) {
    for (int s = 0; s < steps; ++s) rk4_step(dt);
    t_ += dt * steps;
  }

  double t() const { return t_; }
  double mean_x() const { return weighted(x_, [](double v) { return v; }); }
  double mean_p() const { return weighted(p_, [](double v) { return v; }); }
  double mean_force() const {
    double m = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) m += w_[i] * force_(x_[i]);
    return m;
  }
  double mean_kinetic() const {
    double m = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) m += w_[i] * p_[i] * p_[i];
    return m / (2.0 * mass_);
  }

private:
  template <typename F>
  double weighted(const std::vector<double>& v, F&& f) const {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) m += w_[i] * f(v[i]);
    return m;
  }

  void rk4_step(double dt) {
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const double x0 = x_[i], p0 = p_[i];
      const double k1x = p0 / mass_, k1p = force_(x0);
      const double k2x = (p0 + 0.5 * dt * k1p) / mass_, k2p = force_(x0 + 0.5 * dt * k1x);
      const double k3x = (p0 + 0.5 * dt * k2p) / mass_, k3p = force_(x0 + 0.5 * dt * k2x);
      const double k4x = (p0 + dt * k3p) / mass_, k4p = force_(x0 + dt * k3x);
      x_[i] = x0 + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      p_[i] = p0 + dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
  }

  std::function<double(double)> force_;
  double mass_;
  double t_ = 0.0;
  std::vector<double> x_, p_, w_;
};

/// Trapezoid quadrature of a lambda over [a, b] (oracle-side integrator).
template <typename F>
double quad(F&& f, double a, double b, int n = 20001) {
  const double h = (b - a) / (n - 1);
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i + 1 < n; ++i) s += f(a + i * h);
  return s * h;
}

}  // namespace oracles

#endif
