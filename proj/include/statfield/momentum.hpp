#ifndef STATFIELD_MOMENTUM_HPP
#define STATFIELD_MOMENTUM_HPP

#include <array>
#include <vector>

#include "statfield/fields.hpp"

namespace statfield {

/// phi(p) on the conjugate momentum grid, spacing dp = 2*pi*s/(n*dx),
/// values mapped to the symmetric range (-pi s/dx, pi s/dx].
struct MomentumSpectrum {
  std::vector<double> p;       // ascending
  std::vector<Complex> phi;
  double dp = 0.0;
  double s_const = 1.0;
};

/// Momentum probability density w(p) on a uniform p grid. `moments` holds
/// the 0th/1st/2nd moments: for the quantum density these are p-grid
/// quadratures; for the hybrid (pushforward) density they are evaluated
/// exactly in x space (the binned values are for export/plotting, where the
/// bin-center quantization would otherwise leak into the moments).
struct MomentumDensity {
  std::vector<double> p;
  std::vector<double> w;
  double dp = 0.0;
  std::array<double, 3> moments{0.0, 0.0, 0.0};
};

/// Scaled Fourier transform phi(p) = (1/sqrt(2 pi)) \int psi e^{-i p x / s} dx,
/// realized by a discrete transform with grid phase factors.
MomentumSpectrum fourier_forward(const WaveFunction& psi);

/// w = |phi|^2 / s (the h = 0 rule).
MomentumDensity quantum_momentum_density(const MomentumSpectrum& phi);

/// The momentum field g(x) = dS/dx, evaluated through psi = sqrt(rho) e^{iS/s}
/// as s Im(psi* psi')/rho (spectrally accurate for decaying rho); central
/// differences in the sub-floor tails.
SampledField momentum_field(const FieldState& state);

/// Pushforward of rho under g(x) = S'(x), binned onto the given uniform p
/// grid (out-of-range mass clips to the end bins). Exact x-space moments.
MomentumDensity classical_momentum_density(const FieldState& state,
                                           const std::vector<double>& p_grid);

/// Same, with an automatically sized grid (default bin count n/4).
MomentumDensity classical_momentum_density(const FieldState& state, int bins = -1);

/// h = w_classical - w_quantum on the shared conjugate grid, plus moment
/// differences (0th/1st vanish for node-free states; 2nd equals -(s^2/4) I[rho]).
struct HDiagnostic {
  std::vector<double> p;
  std::vector<double> h;
  double dp = 0.0;
  std::array<double, 3> moments{0.0, 0.0, 0.0};
};
HDiagnostic h_diagnostic(const FieldState& state, double s_const);

/// T = (1/2m) \int psi* (s/i d/dx)^2 psi dx via the spectral representation
/// (= \int w p^2/2m dp with the h = 0 rule).
double kinetic_expectation(const WaveFunction& psi, double mass);

/// Two-term split T = <(S')^2>/2m + (s^2/8m) I[rho].
struct KineticSplit {
  double total = 0.0;
  double gradient_part = 0.0;  // <(S')^2>/2m
  double fisher_part = 0.0;    // (s^2/8m) I[rho]
};
KineticSplit kinetic_split(const FieldState& state, double mass, double s_const);

double density_moment(const MomentumDensity& w, int k);

}  // namespace statfield

#endif
