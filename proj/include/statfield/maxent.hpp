#ifndef STATFIELD_MAXENT_HPP
#define STATFIELD_MAXENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "statfield/grid.hpp"

namespace statfield {

/// Sample space with an energy per point. Discrete spaces carry unit weights;
/// grid-discretized continuous spaces carry dx weights — both cases share the
/// same machinery below.
struct EnergyLandscape {
  std::vector<double> coordinate;  // x or index, for reporting/export
  std::vector<double> energy;
  double weight = 1.0;  // quadrature weight per point (dx, or 1 for discrete)

  static EnergyLandscape discrete(std::vector<double> energies);
  static EnergyLandscape continuous(const GridSpec& grid, std::vector<double> energies);

  int size() const { return static_cast<int>(energy.size()); }
  double min_energy() const;
  double max_energy() const;
};

/// rho_i = exp(-lambda2 E_i) / Z (max-shifted before exponentiation).
/// The result integrates to 1 under the landscape weights.
std::vector<double> canonical_distribution(const EnergyLandscape& landscape, double lambda2);

/// Mean energy of the canonical distribution at lambda2.
double canonical_mean_energy(const EnergyLandscape& landscape, double lambda2);

/// Solves -d/d lambda2 ln Z = E_target by bracketing + Newton. E_target must
/// lie strictly between the extreme grid energies; throws OutOfRange at the
/// guard otherwise. Residual <= 1e-12 * energy spread.
double solve_lambda(const EnergyLandscape& landscape, double e_target);

/// Random normalized, mean-energy-preserving perturbations of the canonical
/// distribution; K[rho* + delta eta] - K[rho*] must be non-positive beyond
/// curvature tolerance (entropy part is concave).
struct ExtremumReport {
  int trials = 0;
  int non_increasing = 0;
  double max_increase = 0.0;  // most positive K difference observed
  bool pass = false;
};
ExtremumReport extremum_check(const EnergyLandscape& landscape,
                              const std::vector<double>& rho_star, double lambda2,
                              int trials, double delta, std::uint64_t seed);

/// Entropy of a distribution under the landscape weights.
double landscape_entropy(const EnergyLandscape& landscape, const std::vector<double>& rho);
double landscape_mean_energy(const EnergyLandscape& landscape, const std::vector<double>& rho);

}  // namespace statfield

#endif
