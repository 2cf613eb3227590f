#ifndef STATFIELD_FIELDS_HPP
#define STATFIELD_FIELDS_HPP

#include <string>
#include <vector>

#include "statfield/grid.hpp"

namespace statfield {

/// The dynamical pair (rho, S) at time t. rho is a normalized probability
/// density (1/length); s_phase carries action units and is meaningful where
/// rho is above the density floor.
struct FieldState {
  SampledField rho;
  SampledField s_phase;
  double t = 0.0;
};

/// Complex field psi = sqrt(rho) * exp(i S / s_const) on the same grid.
struct WaveFunction {
  GridSpec grid;
  std::vector<Complex> values;
  double t = 0.0;
  double s_const = 1.0;

  int size() const { return grid.n; }
  double norm() const;  // integral of |psi|^2
};

WaveFunction to_wavefunction(const FieldState& state, double s_const);

enum class UnwrapPolicy {
  PrincipalAnchor,  // S at the leftmost above-floor point = s * arg(psi) there
  ZeroAnchor,       // S anchored to exactly 0 there
};

/// Inverse map: rho = |psi|^2, S by cumulative phase unwrapping from the
/// leftmost above-floor point; S is extended as a constant into the sub-floor
/// tails. Throws NodeError when the above-floor region is disconnected.
FieldState from_wavefunction(const WaveFunction& psi,
                             UnwrapPolicy policy = UnwrapPolicy::PrincipalAnchor);

/// Per-factor decay diagnostics: max |rho * A| over the outermost grid points
/// for A in {1, V, dS/dt, x S', (S')^2}.
struct DecayReport {
  struct Entry {
    std::string factor;
    double max_abs = 0.0;
    bool pass = false;
  };
  std::vector<Entry> entries;
  double decay_tol = 0.0;
  bool pass = false;
};

struct DecayCheckOptions {
  double decay_tol = 1e-8;
  double edge_fraction = 0.025;  // per side
  double mass = 1.0;
  double s_const = 1.0;
};

class CouplingSpec;  // coupling.hpp

/// Evaluates the decay conditions for a state in potential V. dS/dt is taken
/// from the dynamics right-hand side with the given coupling (classical when
/// none is supplied); sub-floor tail points use L0 = 0.
DecayReport check_decay(const FieldState& state, const SampledField& V,
                        const CouplingSpec* coupling = nullptr,
                        const DecayCheckOptions& opts = {});

// -- common initial states -------------------------------------------------

/// Normalized Gaussian density with mean mu and std sigma.
SampledField gaussian_density(const GridSpec& g, double mu, double sigma);

/// Gaussian state with linear phase S = p0 x.
FieldState gaussian_state(const GridSpec& g, double mu, double sigma, double p0);

/// Harmonic-oscillator ground state density for (m, omega, s_const):
/// variance s_const / (2 m omega).
FieldState ho_ground_state(const GridSpec& g, double mass, double omega, double s_const);

}  // namespace statfield

#endif
