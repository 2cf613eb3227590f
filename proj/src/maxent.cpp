#include "statfield/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace statfield {

EnergyLandscape EnergyLandscape::discrete(std::vector<double> energies) {
  EnergyLandscape l;
  l.weight = 1.0;
  l.coordinate.resize(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) l.coordinate[i] = static_cast<double>(i);
  l.energy = std::move(energies);
  if (l.size() < 2) throw ConfigError("EnergyLandscape: need at least 2 points");
  return l;
}

EnergyLandscape EnergyLandscape::continuous(const GridSpec& grid,
                                            std::vector<double> energies) {
  if (static_cast<int>(energies.size()) != grid.n)
    throw ConfigError("EnergyLandscape: energy count does not match grid");
  EnergyLandscape l;
  l.weight = grid.dx();
  l.coordinate = grid.points();
  l.energy = std::move(energies);
  return l;
}

double EnergyLandscape::min_energy() const {
  return *std::min_element(energy.begin(), energy.end());
}
double EnergyLandscape::max_energy() const {
  return *std::max_element(energy.begin(), energy.end());
}

std::vector<double> canonical_distribution(const EnergyLandscape& l, double lambda2) {
  for (double e : l.energy)
    if (!std::isfinite(e)) throw ConfigError("EnergyLandscape: non-finite energy");
  // max-shift before exponentiation to avoid overflow for either sign
  const double shift = (lambda2 >= 0.0) ? l.min_energy() : l.max_energy();
  std::vector<double> rho(l.energy.size());
  double z = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    rho[i] = std::exp(-lambda2 * (l.energy[i] - shift));
    z += rho[i];
  }
  z *= l.weight;
  if (!(z > 0.0) || !std::isfinite(z))
    throw NumericError("Canonical", "partition sum is not positive/finite");
  for (double& v : rho) v /= z;
  return rho;
}

double canonical_mean_energy(const EnergyLandscape& l, double lambda2) {
  const std::vector<double> rho = canonical_distribution(l, lambda2);
  return landscape_mean_energy(l, rho);
}

double landscape_mean_energy(const EnergyLandscape& l, const std::vector<double>& rho) {
  double m = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) m += rho[i] * l.energy[i];
  return m * l.weight;
}

double landscape_entropy(const EnergyLandscape& l, const std::vector<double>& rho) {
  double s = 0.0;
  for (double v : rho)
    if (v > 0.0) s -= v * std::log(v);
  return s * l.weight;
}

double solve_lambda(const EnergyLandscape& l, double e_target) {
  const double e_lo = l.min_energy();
  const double e_hi = l.max_energy();
  const double spread = e_hi - e_lo;
  if (!(spread > 0.0)) throw ConfigError("solve_lambda: landscape energies are constant");
  if (!(e_target > e_lo) || !(e_target < e_hi))
    throw out_of_range("E_target must lie strictly between min and max energies");

  // E(lambda) is strictly decreasing; bracket, then safeguarded Newton using
  // E'(lambda) = -Var(E).
  double lo = -1.0, hi = 1.0;
  const double lambda_guard = 1e8 / std::max(spread, 1e-300);
  while (canonical_mean_energy(l, hi) > e_target) {
    hi *= 2.0;
    if (hi > lambda_guard)
      throw out_of_range("E_target too close to the minimum energy (lambda2 -> +inf)");
  }
  while (canonical_mean_energy(l, lo) < e_target) {
    lo *= 2.0;
    if (lo < -lambda_guard)
      throw out_of_range("E_target too close to the maximum energy (lambda2 -> -inf)");
  }

  double x = 0.5 * (lo + hi);
  const double tol = 1e-12 * spread;
  for (int iter = 0; iter < 200; ++iter) {
    const std::vector<double> rho = canonical_distribution(l, x);
    const double mean = landscape_mean_energy(l, rho);
    const double r = mean - e_target;
    if (std::abs(r) <= tol) return x;
    if (r > 0.0) lo = x; else hi = x;
    double var = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const double de = l.energy[i] - mean;
      var += rho[i] * de * de;
    }
    var *= l.weight;
    double next = (var > 0.0) ? x + r / var : x;  // dE/dlambda = -var
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

ExtremumReport extremum_check(const EnergyLandscape& l, const std::vector<double>& rho_star,
                              double lambda2, int trials, double delta, std::uint64_t seed) {
  const int n = l.size();
  if (static_cast<int>(rho_star.size()) != n)
    throw ConfigError("extremum_check: rho size mismatch");

  const double e_star = landscape_mean_energy(l, rho_star);
  // K[rho] = S[rho] - lambda2 (E[rho] - e_star) - lambda1 (norm - 1); the
  // perturbations preserve both constraints, so the multiplier terms cancel
  // and only the concave entropy part can move.
  auto k_of = [&](const std::vector<double>& rho) {
    return landscape_entropy(l, rho) - lambda2 * (landscape_mean_energy(l, rho) - e_star);
  };
  const double k_star = k_of(rho_star);

  ExtremumReport rep;
  rep.trials = trials;
  // Box-Muller on a seeded 64-bit engine: stable across platforms.
  std::mt19937_64 rng(seed);
  auto normal = [&rng]() {
    std::uniform_real_distribution<double> u(1e-12, 1.0);
    const double a = u(rng), b = u(rng);
    return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * std::numbers::pi * b);
  };

  const double curvature_tol = 1e-14;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> eta(static_cast<std::size_t>(n));
    for (double& v : eta) v = normal();
    // project out normalization and mean-energy directions
    for (int pass = 0; pass < 2; ++pass) {
      double s0 = 0.0, s1 = 0.0, n0 = 0.0, n1 = 0.0;
      for (int i = 0; i < n; ++i) {
        s0 += eta[static_cast<std::size_t>(i)];
        s1 += eta[static_cast<std::size_t>(i)] * l.energy[static_cast<std::size_t>(i)];
        n0 += 1.0;
        n1 += l.energy[static_cast<std::size_t>(i)] * l.energy[static_cast<std::size_t>(i)];
      }
      const double c0 = s0 / n0;
      for (double& v : eta) v -= c0;
      s1 = 0.0;
      double e_norm = 0.0;
      std::vector<double> e_centered(static_cast<std::size_t>(n));
      double e_mean = 0.0;
      for (int i = 0; i < n; ++i) e_mean += l.energy[static_cast<std::size_t>(i)];
      e_mean /= n0;
      for (int i = 0; i < n; ++i) {
        e_centered[static_cast<std::size_t>(i)] = l.energy[static_cast<std::size_t>(i)] - e_mean;
        s1 += eta[static_cast<std::size_t>(i)] * e_centered[static_cast<std::size_t>(i)];
        e_norm += e_centered[static_cast<std::size_t>(i)] * e_centered[static_cast<std::size_t>(i)];
      }
      if (e_norm > 0.0)
        for (int i = 0; i < n; ++i)
          eta[static_cast<std::size_t>(i)] -=
              s1 / e_norm * e_centered[static_cast<std::size_t>(i)];
    }
    // scale so rho stays positive
    double limit = 1.0;
    for (int i = 0; i < n; ++i) {
      const double e = eta[static_cast<std::size_t>(i)];
      if (e < 0.0)
        limit = std::min(limit, -0.5 * rho_star[static_cast<std::size_t>(i)] / (delta * e));
    }
    std::vector<double> rho = rho_star;
    for (int i = 0; i < n; ++i)
      rho[static_cast<std::size_t>(i)] += delta * limit * eta[static_cast<std::size_t>(i)];

    const double dk = k_of(rho) - k_star;
    rep.max_increase = std::max(rep.max_increase, dk);
    if (dk <= curvature_tol) ++rep.non_increasing;
  }
  rep.pass = rep.non_increasing == rep.trials;
  return rep;
}

}  // namespace statfield
