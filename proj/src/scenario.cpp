#include "statfield/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "statfield/io.hpp"
#include "statfield/maxent.hpp"
#include "statfield/symbolic.hpp"

namespace statfield {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void config_fail(const std::string& where, const std::string& msg) {
  throw ConfigError("config error at " + where + ": " + msg);
}

void reject_unknown_keys(const ordered_json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) config_fail(where, "unknown key '" + key + "'");
}

const ordered_json* find(const ordered_json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const ordered_json& obj, const std::string& where, const std::string& key,
                  const double* fallback = nullptr) {
  const ordered_json* v = find(obj, key);
  if (!v) {
    if (fallback) return *fallback;
    config_fail(where, "missing key '" + key + "'");
  }
  if (!v->is_number()) config_fail(where + "." + key, "expected a number");
  return v->get<double>();
}

long long get_integer(const ordered_json& obj, const std::string& where,
                      const std::string& key, const long long* fallback = nullptr) {
  const ordered_json* v = find(obj, key);
  if (!v) {
    if (fallback) return *fallback;
    config_fail(where, "missing key '" + key + "'");
  }
  if (!v->is_number_integer()) config_fail(where + "." + key, "expected an integer");
  return v->get<long long>();
}

std::string get_string(const ordered_json& obj, const std::string& where,
                       const std::string& key) {
  const ordered_json* v = find(obj, key);
  if (!v) config_fail(where, "missing key '" + key + "'");
  if (!v->is_string()) config_fail(where + "." + key, "expected a string");
  return v->get<std::string>();
}

bool get_bool(const ordered_json& obj, const std::string& where, const std::string& key,
              bool fallback) {
  const ordered_json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_boolean()) config_fail(where + "." + key, "expected a boolean");
  return v->get<bool>();
}

CouplingSpec parse_coupling(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) config_fail(where, "expected an object");
  const std::string type = get_string(j, where, "type");
  if (type == "classical") {
    reject_unknown_keys(j, where, {"type"});
    return CouplingSpec::classical();
  }
  if (type == "power_law") {
    reject_unknown_keys(j, where, {"type", "n", "coeff"});
    const long long n = get_integer(j, where, "n");
    return CouplingSpec::power_law(static_cast<int>(n), get_number(j, where, "coeff"));
  }
  if (type == "quantum") {
    reject_unknown_keys(j, where, {"type", "hbar_eff"});
    // mass is bound from the top-level scenario mass later
    return CouplingSpec::quantum(get_number(j, where, "hbar_eff"), 1.0);
  }
  if (type == "polynomial_family") {
    reject_unknown_keys(j, where, {"type", "A", "coeffs"});
    const double a = get_number(j, where, "A");
    std::map<int, double> coeffs;
    const ordered_json* cj = find(j, "coeffs");
    if (cj) {
      if (!cj->is_object()) config_fail(where + ".coeffs", "expected an object");
      for (const auto& [key, value] : cj->items()) {
        int n = 0;
        try {
          n = std::stoi(key);
        } catch (const std::exception&) {
          config_fail(where + ".coeffs", "key '" + key + "' is not an integer");
        }
        if (!value.is_number()) config_fail(where + ".coeffs." + key, "expected a number");
        coeffs[n] = value.get<double>();
      }
    }
    try {
      return CouplingSpec::polynomial_family(a, std::move(coeffs));
    } catch (const Error& e) {
      config_fail(where, e.what());
    }
  }
  config_fail(where + ".type", "unknown coupling '" + type + "'");
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& json_text,
                                   const std::filesystem::path& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config error at <root>: expected an object");
  reject_unknown_keys(j, "<root>",
                      {"grid", "initial", "potential", "coupling", "evolution", "mass",
                       "s_const", "seed", "output"});

  ScenarioConfig cfg;

  {
    const ordered_json* g = find(j, "grid");
    if (!g) config_fail("<root>", "missing key 'grid'");
    reject_unknown_keys(*g, "grid", {"x_min", "x_max", "n"});
    const double xmin = get_number(*g, "grid", "x_min");
    const double xmax = get_number(*g, "grid", "x_max");
    const long long n = get_integer(*g, "grid", "n");
    if (n < 8 || n > (1 << 22)) config_fail("grid.n", "must be in [8, 2^22]");
    try {
      cfg.grid = GridSpec(xmin, xmax, static_cast<int>(n));
    } catch (const Error& e) {
      config_fail("grid", e.what());
    }
  }

  {
    const ordered_json* init = find(j, "initial");
    if (!init) config_fail("<root>", "missing key 'initial'");
    if (find(*init, "file")) {
      reject_unknown_keys(*init, "initial", {"file"});
      cfg.init_kind = ScenarioConfig::InitKind::File;
      cfg.init_file = base_dir / get_string(*init, "initial", "file");
    } else {
      const std::string preset = get_string(*init, "initial", "preset");
      if (preset == "gaussian") {
        reject_unknown_keys(*init, "initial", {"preset", "mu", "sigma", "p0"});
        cfg.init_kind = ScenarioConfig::InitKind::Gaussian;
        const double zero = 0.0;
        cfg.init_mu = get_number(*init, "initial", "mu", &zero);
        cfg.init_sigma = get_number(*init, "initial", "sigma");
        cfg.init_p0 = get_number(*init, "initial", "p0", &zero);
        if (!(cfg.init_sigma > 0.0)) config_fail("initial.sigma", "must be positive");
      } else if (preset == "ho_ground") {
        reject_unknown_keys(*init, "initial", {"preset", "omega"});
        cfg.init_kind = ScenarioConfig::InitKind::HoGround;
        cfg.init_omega = get_number(*init, "initial", "omega");
        if (!(cfg.init_omega > 0.0)) config_fail("initial.omega", "must be positive");
      } else {
        config_fail("initial.preset", "unknown preset '" + preset + "'");
      }
    }
  }

  if (const ordered_json* pot = find(j, "potential")) {
    const std::string type = get_string(*pot, "potential", "type");
    if (type == "none") {
      reject_unknown_keys(*pot, "potential", {"type"});
      cfg.pot_kind = ScenarioConfig::PotentialKind::None;
    } else if (type == "linear") {
      reject_unknown_keys(*pot, "potential", {"type", "F"});
      cfg.pot_kind = ScenarioConfig::PotentialKind::Linear;
      cfg.pot_force = get_number(*pot, "potential", "F");
    } else if (type == "harmonic") {
      reject_unknown_keys(*pot, "potential", {"type", "omega"});
      cfg.pot_kind = ScenarioConfig::PotentialKind::Harmonic;
      cfg.pot_omega = get_number(*pot, "potential", "omega");
      if (!(cfg.pot_omega > 0.0)) config_fail("potential.omega", "must be positive");
    } else if (type == "file") {
      reject_unknown_keys(*pot, "potential", {"type", "path"});
      cfg.pot_kind = ScenarioConfig::PotentialKind::File;
      cfg.pot_file = base_dir / get_string(*pot, "potential", "path");
    } else {
      config_fail("potential.type", "unknown potential '" + type + "'");
    }
  }

  cfg.mass = [&] {
    const double one = 1.0;
    return get_number(j, "<root>", "mass", &one);
  }();
  cfg.s_const = [&] {
    const double one = 1.0;
    return get_number(j, "<root>", "s_const", &one);
  }();
  if (!(cfg.mass > 0.0)) config_fail("mass", "must be positive");
  if (!(cfg.s_const > 0.0)) config_fail("s_const", "must be positive");

  if (const ordered_json* cj = find(j, "coupling")) {
    cfg.coupling = parse_coupling(*cj, "coupling");
    if (cfg.coupling.kind() == CouplingKind::Quantum)
      cfg.coupling = CouplingSpec::quantum(cfg.coupling.hbar_eff(), cfg.mass);
  }

  if (const ordered_json* ev = find(j, "evolution")) {
    reject_unknown_keys(*ev, "evolution",
                        {"scheme", "dt", "t_final", "record_every", "renormalize",
                         "momentum_rule", "density_scheme"});
    cfg.has_evolution = true;
    const std::string scheme = get_string(*ev, "evolution", "scheme");
    if (scheme == "rk4") cfg.scheme = Scheme::Rk4;
    else if (scheme == "split_step") cfg.scheme = Scheme::SplitStep;
    else config_fail("evolution.scheme", "must be 'rk4' or 'split_step'");
    cfg.dt = get_number(*ev, "evolution", "dt");
    cfg.t_final = get_number(*ev, "evolution", "t_final");
    const long long one = 1;
    cfg.record_every = static_cast<int>(get_integer(*ev, "evolution", "record_every", &one));
    if (!(cfg.dt > 0.0)) config_fail("evolution.dt", "must be positive");
    if (cfg.t_final < 0.0) config_fail("evolution.t_final", "must be >= 0");
    if (cfg.record_every < 1) config_fail("evolution.record_every", "must be >= 1");
    cfg.renormalize = get_bool(*ev, "evolution", "renormalize", true);
    if (const ordered_json* mr = find(*ev, "momentum_rule")) {
      const std::string rule = mr->is_string() ? mr->get<std::string>() : "";
      if (rule == "auto") cfg.momentum_rule = MomentumRule::Auto;
      else if (rule == "quantum") cfg.momentum_rule = MomentumRule::Quantum;
      else if (rule == "hybrid") cfg.momentum_rule = MomentumRule::Hybrid;
      else config_fail("evolution.momentum_rule", "must be auto|quantum|hybrid");
    }
    if (const ordered_json* ds = find(*ev, "density_scheme")) {
      const std::string s = ds->is_string() ? ds->get<std::string>() : "";
      if (s == "spectral") cfg.density_scheme = DerivScheme::Spectral;
      else if (s == "central") cfg.density_scheme = DerivScheme::Central;
      else config_fail("evolution.density_scheme", "must be spectral|central");
    }
  }

  if (const ordered_json* out = find(j, "output")) {
    reject_unknown_keys(*out, "output", {"fields"});
    cfg.dump_fields = get_bool(*out, "output", "fields", false);
  }

  if (const ordered_json* seed = find(j, "seed")) {
    if (!seed->is_number_integer() || seed->get<long long>() < 0)
      config_fail("seed", "expected a non-negative integer");
    cfg.seed = seed->get<std::uint64_t>();
  }

  // Resolved copy (defaults filled) for the run directory.
  ordered_json r;
  r["grid"] = {{"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}, {"n", cfg.grid.n}};
  switch (cfg.init_kind) {
    case ScenarioConfig::InitKind::Gaussian:
      r["initial"] = {{"preset", "gaussian"}, {"mu", cfg.init_mu}, {"sigma", cfg.init_sigma},
                      {"p0", cfg.init_p0}};
      break;
    case ScenarioConfig::InitKind::HoGround:
      r["initial"] = {{"preset", "ho_ground"}, {"omega", cfg.init_omega}};
      break;
    case ScenarioConfig::InitKind::File:
      r["initial"] = {{"file", cfg.init_file.string()}};
      break;
  }
  switch (cfg.pot_kind) {
    case ScenarioConfig::PotentialKind::None: r["potential"] = {{"type", "none"}}; break;
    case ScenarioConfig::PotentialKind::Linear:
      r["potential"] = {{"type", "linear"}, {"F", cfg.pot_force}};
      break;
    case ScenarioConfig::PotentialKind::Harmonic:
      r["potential"] = {{"type", "harmonic"}, {"omega", cfg.pot_omega}};
      break;
    case ScenarioConfig::PotentialKind::File:
      r["potential"] = {{"type", "file"}, {"path", cfg.pot_file.string()}};
      break;
  }
  switch (cfg.coupling.kind()) {
    case CouplingKind::Classical: r["coupling"] = {{"type", "classical"}}; break;
    case CouplingKind::PowerLaw:
      r["coupling"] = {{"type", "power_law"}, {"n", cfg.coupling.power_n()},
                       {"coeff", cfg.coupling.power_coeff()}};
      break;
    case CouplingKind::Quantum:
      r["coupling"] = {{"type", "quantum"}, {"hbar_eff", cfg.coupling.hbar_eff()}};
      break;
    case CouplingKind::PolynomialFamily: {
      ordered_json coeffs = ordered_json::object();
      for (const auto& [n, c] : cfg.coupling.family_coeffs())
        coeffs[std::to_string(n)] = c;
      r["coupling"] = {{"type", "polynomial_family"}, {"A", cfg.coupling.family_A()},
                       {"coeffs", coeffs}};
      break;
    }
  }
  if (cfg.has_evolution) {
    r["evolution"] = {
        {"scheme", cfg.scheme == Scheme::Rk4 ? "rk4" : "split_step"},
        {"dt", cfg.dt},
        {"t_final", cfg.t_final},
        {"record_every", cfg.record_every},
        {"renormalize", cfg.renormalize},
        {"momentum_rule", cfg.momentum_rule == MomentumRule::Auto
                              ? "auto"
                              : (cfg.momentum_rule == MomentumRule::Quantum ? "quantum"
                                                                            : "hybrid")},
        {"density_scheme",
         cfg.density_scheme == DerivScheme::Spectral ? "spectral" : "central"}};
  }
  r["mass"] = cfg.mass;
  r["s_const"] = cfg.s_const;
  r["seed"] = cfg.seed;
  r["output"] = {{"fields", cfg.dump_fields}};
  cfg.resolved = std::move(r);
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config: " + path.string());
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return parse_scenario_text(text, path.parent_path());
}

FieldState build_initial_state(const ScenarioConfig& cfg) {
  switch (cfg.init_kind) {
    case ScenarioConfig::InitKind::Gaussian:
      return gaussian_state(cfg.grid, cfg.init_mu, cfg.init_sigma, cfg.init_p0);
    case ScenarioConfig::InitKind::HoGround:
      return ho_ground_state(cfg.grid, cfg.mass, cfg.init_omega, cfg.s_const);
    case ScenarioConfig::InitKind::File: {
      FieldState st = io::read_state_csv(cfg.init_file, cfg.grid);
      require_density(st.rho, 1e-6);
      normalize_density(st.rho);
      return st;
    }
  }
  throw Error(ErrorKind::Internal, "unreachable init kind");
}

SampledField build_potential(const ScenarioConfig& cfg) {
  SampledField V(cfg.grid);
  switch (cfg.pot_kind) {
    case ScenarioConfig::PotentialKind::None: break;
    case ScenarioConfig::PotentialKind::Linear:
      for (int k = 0; k < cfg.grid.n; ++k) V[k] = -cfg.pot_force * cfg.grid.x(k);
      break;
    case ScenarioConfig::PotentialKind::Harmonic:
      for (int k = 0; k < cfg.grid.n; ++k) {
        const double x = cfg.grid.x(k);
        V[k] = 0.5 * cfg.mass * cfg.pot_omega * cfg.pot_omega * x * x;
      }
      break;
    case ScenarioConfig::PotentialKind::File:
      V = io::read_field_csv(cfg.pot_file, cfg.grid);
      break;
  }
  return V;
}

EvolutionConfig build_evolution_config(const ScenarioConfig& cfg) {
  if (!cfg.has_evolution) throw ConfigError("config error at <root>: missing key 'evolution'");
  EvolutionConfig ev;
  ev.dt = cfg.dt;
  ev.t_final = cfg.t_final;
  ev.record_every = cfg.record_every;
  ev.scheme = cfg.scheme;
  ev.potential = build_potential(cfg);
  ev.coupling = cfg.coupling;
  ev.mass = cfg.mass;
  ev.s_const = cfg.s_const;
  ev.renormalize = cfg.renormalize;
  ev.momentum_rule = cfg.momentum_rule;
  ev.density_scheme = cfg.density_scheme;
  return ev;
}

namespace {

void prepare_out_dir(const std::filesystem::path& out_dir, const ScenarioConfig& cfg) {
  std::filesystem::create_directories(out_dir);
  io::write_text(out_dir / "config.json", cfg.resolved.dump(2) + "\n");
}

ordered_json record_json(const ObservableRecord& r) {
  return ordered_json{{"t", r.t},           {"x_mean", r.x_mean},   {"p_mean", r.p_mean},
                      {"F_mean", r.F_mean}, {"T_mean", r.T_mean},   {"V_mean", r.V_mean},
                      {"E_mean", r.E_mean}, {"fisher_I", r.fisher_I},
                      {"entropy", r.entropy}};
}

}  // namespace

RunResult run_evolve(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
  prepare_out_dir(out_dir, cfg);
  const FieldState initial = build_initial_state(cfg);
  const EvolutionConfig ev = build_evolution_config(cfg);
  const Trajectory traj = evolve(initial, ev);

  const std::vector<ObservableRecord> recs = traj.records();
  const std::size_t m = recs.size();
  std::vector<double> t(m), xm(m), pm(m), fm(m), tm(m), vm(m), em(m), fi(m), en(m), r1(m),
      r2(m);
  for (std::size_t i = 0; i < m; ++i) {
    const ObservableRecord& r = recs[i];
    t[i] = r.t; xm[i] = r.x_mean; pm[i] = r.p_mean; fm[i] = r.F_mean; tm[i] = r.T_mean;
    vm[i] = r.V_mean; em[i] = r.E_mean; fi[i] = r.fisher_I; en[i] = r.entropy;
    r1[i] = r.ehrenfest_r1; r2[i] = r.ehrenfest_r2;
  }
  io::write_csv(out_dir / "trajectory.csv",
                {{"t", &t}, {"x_mean", &xm}, {"p_mean", &pm}, {"F_mean", &fm},
                 {"T_mean", &tm}, {"V_mean", &vm}, {"E_mean", &em}, {"fisher_I", &fi},
                 {"entropy", &en}, {"ehrenfest_r1", &r1}, {"ehrenfest_r2", &r2}});

  if (cfg.dump_fields) {
    const std::filesystem::path fdir = out_dir / "fields";
    std::filesystem::create_directories(fdir);
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "state_%06zu.csv", i);
      if (traj.snapshots[i].state_valid)
        io::write_state_csv(fdir / name, traj.snapshots[i].state);
    }
  }

  double max_r1 = 0.0, max_r2 = 0.0, p_scale = 0.0, f_scale = 0.0, e_drift = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    max_r1 = std::max(max_r1, std::abs(r1[i]));
    max_r2 = std::max(max_r2, std::abs(r2[i]));
    p_scale = std::max(p_scale, std::abs(pm[i]) / cfg.mass);
    f_scale = std::max(f_scale, std::abs(fm[i]));
    if (em[0] != 0.0) e_drift = std::max(e_drift, std::abs(em[i] - em[0]) / std::abs(em[0]));
  }

  RunResult out;
  out.summary = ordered_json{
      {"command", "evolve"},
      {"coupling", cfg.coupling.describe()},
      {"scheme", cfg.scheme == Scheme::Rk4 ? "rk4" : "split_step"},
      {"steps", traj.steps_taken},
      {"records", m},
      {"seed", cfg.seed},
      {"norm_drift_accumulated", traj.accumulated_norm_drift},
      {"energy_drift_rel_max", e_drift},
      {"max_abs_ehrenfest_r1", max_r1},
      {"max_abs_ehrenfest_r2", max_r2},
      {"ehrenfest_r1_rel", p_scale > 0.0 ? max_r1 / p_scale : max_r1},
      {"ehrenfest_r2_rel", f_scale > 0.0 ? max_r2 / f_scale : max_r2},
      {"initial", record_json(recs.front())},
      {"final", record_json(recs.back())},
      {"warnings", traj.warnings}};
  io::write_text(out_dir / "summary.json", out.summary.dump(2) + "\n");
  return out;
}

RunResult run_spectrum(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
  prepare_out_dir(out_dir, cfg);
  const FieldState state = build_initial_state(cfg);

  const WaveFunction psi = to_wavefunction(state, cfg.s_const);
  const MomentumDensity wq = quantum_momentum_density(fourier_forward(psi));
  const MomentumDensity wc = classical_momentum_density(state, wq.p);
  const HDiagnostic h = h_diagnostic(state, cfg.s_const);
  const double fisher = fisher_information(state.rho);

  io::write_csv(out_dir / "momentum_quantum.csv", {{"p", &wq.p}, {"w", &wq.w}});
  io::write_csv(out_dir / "momentum_hybrid.csv", {{"p", &wc.p}, {"w", &wc.w}});
  io::write_csv(out_dir / "h.csv", {{"p", &h.p}, {"h", &h.h}});

  const double s2_over4_I = 0.25 * cfg.s_const * cfg.s_const * fisher;
  RunResult out;
  out.summary = ordered_json{
      {"command", "spectrum"},
      {"quantum_moments", {wq.moments[0], wq.moments[1], wq.moments[2]}},
      {"hybrid_moments", {wc.moments[0], wc.moments[1], wc.moments[2]}},
      {"h_moments", {h.moments[0], h.moments[1], h.moments[2]}},
      {"fisher_I", fisher},
      {"s2_over_4_times_I", s2_over4_I},
      {"second_moment_identity_gap", h.moments[2] + s2_over4_I}};
  io::write_text(out_dir / "h_diagnostic.json", out.summary.dump(2) + "\n");
  return out;
}

RunResult run_maxent(const MaxentArgs& args, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  std::vector<double> coord, energy;
  io::read_two_column_csv(args.landscape_csv, &coord, &energy);
  if (coord.size() < 2) throw ConfigError("maxent: landscape needs at least 2 points");

  // "i,E" (consecutive integers from 0) is a discrete space; "x,E" with
  // uniform spacing is a grid-discretized continuous one.
  bool discrete = true;
  for (std::size_t i = 0; i < coord.size(); ++i)
    if (coord[i] != static_cast<double>(i)) { discrete = false; break; }

  EnergyLandscape land;
  if (discrete) {
    land = EnergyLandscape::discrete(energy);
  } else {
    const double dx = coord[1] - coord[0];
    if (!(dx > 0.0)) throw ConfigError("maxent: landscape x column must be increasing");
    for (std::size_t i = 1; i < coord.size(); ++i)
      if (std::abs((coord[i] - coord[i - 1]) - dx) > 1e-9 * std::max(1.0, std::abs(dx)))
        throw ConfigError("maxent: landscape x column must be uniformly spaced");
    land.coordinate = coord;
    land.energy = energy;
    land.weight = dx;
  }

  const double lambda2 = solve_lambda(land, args.e_target);
  const std::vector<double> rho = canonical_distribution(land, lambda2);
  const double mean_e = landscape_mean_energy(land, rho);
  const double entropy = landscape_entropy(land, rho);
  const ExtremumReport rep =
      extremum_check(land, rho, lambda2, args.trials, args.delta, args.seed);

  io::write_csv(out_dir / "canonical.csv",
                {{discrete ? "i" : "x", &land.coordinate}, {"E", &land.energy},
                 {"rho", &rho}});

  RunResult out;
  out.ok = rep.pass;
  out.summary = ordered_json{
      {"command", "maxent"},
      {"landscape", args.landscape_csv.string()},
      {"discrete", discrete},
      {"e_target", args.e_target},
      {"lambda2", lambda2},
      {"mean_energy", mean_e},
      {"mean_energy_residual", mean_e - args.e_target},
      {"entropy", entropy},
      {"seed", args.seed},
      {"extremum",
       {{"trials", rep.trials}, {"non_increasing", rep.non_increasing},
        {"max_increase", rep.max_increase}, {"pass", rep.pass}}}};
  io::write_text(out_dir / "maxent.json", out.summary.dump(2) + "\n");
  return out;
}

RunResult run_verify_symbolic(int window) {
  const std::vector<symbolic::CheckResult> checks = symbolic::run_verification_suite(window);
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  RunResult out;
  out.ok = all;
  out.summary = ordered_json{{"command", "verify-symbolic"}, {"window", window},
                             {"all_pass", all}, {"checks", arr}};
  return out;
}

}  // namespace statfield
