// Command-line front end; talks to the core exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "statfield.h"

namespace {

struct RunHandle {
  sf_run* run = nullptr;
  ~RunHandle() { sf_run_free(run); }
};

int finish(sf_status status, const RunHandle& h, bool print_summary = true) {
  if (status != SF_OK && status != SF_ERR_VERIFY) {
    std::cerr << "error: " << sf_last_error() << "\n";
    return static_cast<int>(status);
  }
  if (print_summary && h.run) std::cout << sf_run_summary_json(h.run);
  return static_cast<int>(status);
}

struct BatchEntry {
  std::string config;
  std::string out;
  std::int64_t seed = -1;
};

int run_batch(const std::string& batch_path) {
  std::ifstream is(batch_path);
  if (!is) {
    std::cerr << "error: cannot open batch file " << batch_path << "\n";
    return 2;
  }
  nlohmann::json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: batch file is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  if (!j.is_array()) {
    std::cerr << "error: batch file must be a JSON array\n";
    return 2;
  }
  std::vector<BatchEntry> entries;
  for (const auto& item : j) {
    BatchEntry e;
    if (!item.is_object() || !item.contains("config") || !item.contains("out")) {
      std::cerr << "error: batch entries need 'config' and 'out'\n";
      return 2;
    }
    e.config = item["config"].get<std::string>();
    e.out = item["out"].get<std::string>();
    if (item.contains("seed")) e.seed = item["seed"].get<std::int64_t>();
    entries.push_back(std::move(e));
  }

  std::vector<std::future<int>> futures;
  futures.reserve(entries.size());
  for (const auto& e : entries) {
    futures.push_back(std::async(std::launch::async, [e] {
      sf_run* run = nullptr;
      const sf_status st = sf_evolve(e.config.c_str(), e.out.c_str(), e.seed, &run);
      if (st != SF_OK) std::fprintf(stderr, "[%s] error: %s\n", e.config.c_str(), sf_last_error());
      sf_run_free(run);
      return static_cast<int>(st);
    }));
  }
  int rc = 0;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    const int st = futures[i].get();
    std::printf("[%zu] %s -> %s: %s\n", i, entries[i].config.c_str(), entries[i].out.c_str(),
                st == 0 ? "ok" : "failed");
    if (st != 0 && rc == 0) rc = st;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statfield: coupled density/phase field dynamics laboratory"};
  app.require_subcommand(1);

  std::string config_path, out_dir, batch_path;
  std::int64_t seed = -1;

  CLI::App* evolve = app.add_subcommand("evolve", "run a time evolution scenario");
  evolve->add_option("--config", config_path, "scenario config (JSON)");
  evolve->add_option("--out", out_dir, "output directory");
  evolve->add_option("--seed", seed, "override the config seed");
  evolve->add_option("--batch", batch_path, "JSON array of {config, out[, seed]} entries");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "momentum densities and h diagnostic of the initial state");
  spectrum->add_option("--config", config_path, "scenario config (JSON)")->required();
  spectrum->add_option("--out", out_dir, "output directory")->required();
  spectrum->add_option("--seed", seed, "override the config seed");

  int window = 6;
  CLI::App* verify = app.add_subcommand("verify-symbolic", "exact symbolic verification suite");
  verify->add_option("--window", window, "coefficient window radius")
      ->check(CLI::Range(2, 12));

  std::string landscape;
  double e_target = 0.0;
  int trials = 100;
  double delta = 1e-3;
  std::uint64_t maxent_seed = 0;
  CLI::App* maxent = app.add_subcommand("maxent", "constrained maximum-entropy solve");
  maxent->add_option("--landscape", landscape, "landscape CSV (x,E or i,E)")->required();
  maxent->add_option("--e-target", e_target, "target mean energy")->required();
  maxent->add_option("--out", out_dir, "output directory")->required();
  maxent->add_option("--trials", trials, "extremum-check trials");
  maxent->add_option("--delta", delta, "extremum-check perturbation size");
  maxent->add_option("--seed", maxent_seed, "extremum-check seed");

  CLI11_PARSE(app, argc, argv);

  if (evolve->parsed()) {
    if (!batch_path.empty()) return run_batch(batch_path);
    if (config_path.empty() || out_dir.empty()) {
      std::cerr << "error: evolve needs --config and --out (or --batch)\n";
      return 2;
    }
    RunHandle h;
    return finish(sf_evolve(config_path.c_str(), out_dir.c_str(), seed, &h.run), h);
  }
  if (spectrum->parsed()) {
    RunHandle h;
    return finish(sf_spectrum(config_path.c_str(), out_dir.c_str(), seed, &h.run), h);
  }
  if (verify->parsed()) {
    RunHandle h;
    const sf_status st = sf_verify_symbolic(window, &h.run);
    if (st != SF_OK && st != SF_ERR_VERIFY) {
      std::cerr << "error: " << sf_last_error() << "\n";
      return static_cast<int>(st);
    }
    const auto report = nlohmann::json::parse(sf_run_summary_json(h.run));
    for (const auto& check : report["checks"]) {
      std::printf("%-72s %s\n", check["name"].get<std::string>().c_str(),
                  check["pass"].get<bool>() ? "PASS" : "FAIL");
      if (!check["pass"].get<bool>())
        std::printf("    witness: %s\n", check["detail"].get<std::string>().c_str());
    }
    std::printf("verify-symbolic: %s\n", report["all_pass"].get<bool>() ? "PASS" : "FAIL");
    return static_cast<int>(st);
  }
  if (maxent->parsed()) {
    RunHandle h;
    return finish(sf_maxent(landscape.c_str(), e_target, trials, delta, maxent_seed,
                            out_dir.c_str(), &h.run),
                  h);
  }
  return 2;
}
