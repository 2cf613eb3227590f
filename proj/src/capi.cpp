#include "statfield.h"

#include <string>

#include "statfield/scenario.hpp"
#include "statfield/version.hpp"

struct sf_run {
  std::string summary;
  bool ok = true;
};

namespace {

thread_local std::string g_last_error;

sf_status status_of(const statfield::Error& e) {
  switch (e.kind()) {
    case statfield::ErrorKind::Config: return SF_ERR_CONFIG;
    case statfield::ErrorKind::Numeric: return SF_ERR_NUMERIC;
    case statfield::ErrorKind::Verify: return SF_ERR_VERIFY;
    case statfield::ErrorKind::Internal: return SF_ERR_INTERNAL;
  }
  return SF_ERR_INTERNAL;
}

template <typename Fn>
sf_status guarded(sf_run** out_run, Fn&& fn) {
  if (out_run) *out_run = nullptr;
  try {
    statfield::RunResult result = fn();
    if (out_run) {
      auto* run = new sf_run;
      run->summary = result.summary.dump(2) + "\n";
      run->ok = result.ok;
      *out_run = run;
    }
    return result.ok ? SF_OK : SF_ERR_VERIFY;
  } catch (const statfield::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SF_ERR_INTERNAL;
  }
}

statfield::ScenarioConfig load_config(const char* config_path, int64_t seed_override) {
  if (!config_path) throw statfield::ConfigError("config path is null");
  statfield::ScenarioConfig cfg = statfield::parse_scenario_file(config_path);
  if (seed_override >= 0) {
    cfg.seed = static_cast<std::uint64_t>(seed_override);
    cfg.resolved["seed"] = cfg.seed;
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return statfield::kVersion; }

const char* sf_last_error(void) { return g_last_error.c_str(); }

sf_status sf_evolve(const char* config_path, const char* out_dir, int64_t seed_override,
                    sf_run** out_run) {
  return guarded(out_run, [&] {
    if (!out_dir) throw statfield::ConfigError("output directory is null");
    return statfield::run_evolve(load_config(config_path, seed_override), out_dir);
  });
}

sf_status sf_spectrum(const char* config_path, const char* out_dir, int64_t seed_override,
                      sf_run** out_run) {
  return guarded(out_run, [&] {
    if (!out_dir) throw statfield::ConfigError("output directory is null");
    return statfield::run_spectrum(load_config(config_path, seed_override), out_dir);
  });
}

sf_status sf_maxent(const char* landscape_csv, double e_target, int trials, double delta,
                    uint64_t seed, const char* out_dir, sf_run** out_run) {
  return guarded(out_run, [&] {
    if (!landscape_csv) throw statfield::ConfigError("landscape path is null");
    if (!out_dir) throw statfield::ConfigError("output directory is null");
    statfield::MaxentArgs args;
    args.landscape_csv = landscape_csv;
    args.e_target = e_target;
    args.trials = trials;
    args.delta = delta;
    args.seed = seed;
    return statfield::run_maxent(args, out_dir);
  });
}

sf_status sf_verify_symbolic(int window, sf_run** out_run) {
  return guarded(out_run, [&] { return statfield::run_verify_symbolic(window); });
}

const char* sf_run_summary_json(const sf_run* run) {
  return run ? run->summary.c_str() : "";
}

int sf_run_ok(const sf_run* run) { return run && run->ok ? 1 : 0; }

void sf_run_free(sf_run* run) { delete run; }

}  // extern "C"
