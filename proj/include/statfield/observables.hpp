#ifndef STATFIELD_OBSERVABLES_HPP
#define STATFIELD_OBSERVABLES_HPP

#include <utility>
#include <vector>

#include "statfield/momentum.hpp"

namespace statfield {

/// Time-stamped scalar bundle recorded along a trajectory. Ehrenfest
/// residuals are filled in post hoc (they need the whole series).
struct ObservableRecord {
  double t = 0.0;
  double x_mean = 0.0;
  double p_mean = 0.0;
  double F_mean = 0.0;
  double T_mean = 0.0;
  double V_mean = 0.0;
  double E_mean = 0.0;
  double fisher_I = 0.0;
  double entropy = 0.0;
  double ehrenfest_r1 = 0.0;
  double ehrenfest_r2 = 0.0;
};

struct Means {
  double x_mean = 0.0;
  double p_mean = 0.0;
  double F_mean = 0.0;
  double V_mean = 0.0;
};

Means means(const FieldState& state, const SampledField& V);
Means means(const WaveFunction& psi, const SampledField& V);

/// Which rule defines T-bar (and hence E-bar) along a trajectory: the h = 0
/// spectral rule, or the hybrid pushforward rule <(S')^2>/2m. Auto picks
/// hybrid for the classical coupling and the h = 0 rule otherwise.
enum class MomentumRule { Auto, Quantum, Hybrid };

struct RecordContext {
  const SampledField* potential = nullptr;
  double mass = 1.0;
  double s_const = 1.0;
  MomentumRule rule = MomentumRule::Quantum;
};

ObservableRecord make_record(const FieldState& state, const RecordContext& ctx);
ObservableRecord make_record(const WaveFunction& psi, const RecordContext& ctx);

/// r1 = d x-bar/dt - p-bar/m and r2 = d p-bar/dt - F-bar, time derivatives by
/// 4th-order finite differences on the (uniformly spaced) record series.
std::pair<std::vector<double>, std::vector<double>> ehrenfest_residuals(
    const std::vector<ObservableRecord>& records, double mass);

/// 4th-order differentiation of a uniformly sampled series (5-point stencils,
/// one-sided at the edges). Needs at least 5 samples.
std::vector<double> differentiate_series(const std::vector<double>& t,
                                         const std::vector<double>& f);

/// I[rho] = int rho (rho'/rho)^2 dx over above-floor points.
double fisher_information(const SampledField& rho,
                          DerivScheme scheme = DerivScheme::Spectral);

/// S[rho] = -int rho ln rho dx (k = 1) over above-floor points.
double shannon_entropy(const SampledField& rho);

/// Discrete entropy -sum p ln p with 0 ln 0 = 0.
double discrete_entropy(const std::vector<double>& probs);

/// G[rho; dx] = -int rho(x) ln(rho(x)/rho(x+dx)) dx with the shifted density
/// from cubic interpolation, plus the small-shift companion -dx^2 I/2.
struct RelativeEntropyShift {
  double G = 0.0;
  double quadratic = 0.0;  // -dx^2 I[rho] / 2
};
RelativeEntropyShift relative_entropy_shift(const SampledField& rho, double dx_shift);

/// Tensor-product additivity report for entropy and Fisher information.
struct CompositionReport {
  double entropy_12 = 0.0, entropy_1 = 0.0, entropy_2 = 0.0;
  double fisher_12 = 0.0, fisher_1 = 0.0, fisher_2 = 0.0;
  double entropy_gap = 0.0;  // S12 - S1 - S2
  double fisher_gap = 0.0;   // I12 - I1 - I2
};
CompositionReport entropy_composition_check(const SampledField& rho1,
                                            const SampledField& rho2);

}  // namespace statfield

#endif
