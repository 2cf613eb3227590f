#ifndef STATFIELD_SCENARIO_HPP
#define STATFIELD_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "statfield/dynamics.hpp"

namespace statfield {

/// Declarative scenario: grid, initial state, potential, coupling, evolution
/// parameters. Parsed from JSON; unknown keys are rejected with path context.
struct ScenarioConfig {
  GridSpec grid;

  enum class InitKind { Gaussian, HoGround, File };
  InitKind init_kind = InitKind::Gaussian;
  double init_mu = 0.0;
  double init_sigma = 1.0;
  double init_p0 = 0.0;
  double init_omega = 1.0;
  std::filesystem::path init_file;

  enum class PotentialKind { None, Linear, Harmonic, File };
  PotentialKind pot_kind = PotentialKind::None;
  double pot_force = 0.0;
  double pot_omega = 1.0;
  std::filesystem::path pot_file;

  CouplingSpec coupling = CouplingSpec::classical();

  bool has_evolution = false;
  Scheme scheme = Scheme::Rk4;
  double dt = 1e-3;
  double t_final = 1.0;
  int record_every = 1;
  bool renormalize = true;
  MomentumRule momentum_rule = MomentumRule::Auto;
  DerivScheme density_scheme = DerivScheme::Spectral;

  double mass = 1.0;
  double s_const = 1.0;
  std::uint64_t seed = 0;
  bool dump_fields = false;

  nlohmann::ordered_json resolved;  // defaults filled in; copied into run dirs
};

ScenarioConfig parse_scenario_file(const std::filesystem::path& path);
ScenarioConfig parse_scenario_text(const std::string& json_text,
                                   const std::filesystem::path& base_dir);

FieldState build_initial_state(const ScenarioConfig& cfg);
SampledField build_potential(const ScenarioConfig& cfg);
EvolutionConfig build_evolution_config(const ScenarioConfig& cfg);

struct RunResult {
  nlohmann::ordered_json summary;
  bool ok = true;  // verification-style outcomes; execution errors throw
};

/// Runs the evolution and writes config.json, trajectory.csv, summary.json
/// (and per-snapshot field dumps when configured) into out_dir.
RunResult run_evolve(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

/// Momentum analysis of the initial state: quantum + hybrid densities and the
/// h diagnostic with moments.
RunResult run_spectrum(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

struct MaxentArgs {
  std::filesystem::path landscape_csv;
  double e_target = 0.0;
  int trials = 100;
  double delta = 1e-3;
  std::uint64_t seed = 0;
};
RunResult run_maxent(const MaxentArgs& args, const std::filesystem::path& out_dir);

/// Full symbolic verification suite; ok iff all checks pass.
RunResult run_verify_symbolic(int window);

}  // namespace statfield

#endif
