// Copyright 2026 The dynsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// dynsyn: experiment runner.
//
//   dynsyn <miet|dt-kl|dt-ul|mean-tr|stochastic|collapse> --config FILE [--seed N] [--workers N] [--out PATH] [--resume]
//   dynsyn selfcheck [--out SCRATCH_DIR]
//
// Exit codes: 0 success, 1 runtime error, 2 config error, 3 numerical-validation failure.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "dynsyn/config.h"
#include "dynsyn/experiments.h"
#include "testing/selfcheck.h"

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_sigint(int) { g_cancel.store(true); }

struct Common {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<int> workers;
  std::string out;
  bool resume = false;
};

dynsyn::SweepConfig load(const std::string& subcommand, const Common& opts) {
  std::ifstream in(opts.config_path);
  if (!in) throw dynsyn::ConfigError(opts.config_path + ": cannot open");
  std::stringstream text;
  text << in.rdbuf();
  std::istringstream parse_in(text.str());
  dynsyn::SweepConfig config = dynsyn::parse_config(parse_in, opts.config_path);
  const dynsyn::Experiment wanted = dynsyn::parse_experiment(subcommand);
  static const std::regex kExperimentKey(R"(^\s*experiment\s*=)");
  bool explicit_experiment = false;
  std::string line;
  for (std::istringstream lines(text.str()); std::getline(lines, line);) {
    if (std::regex_search(line, kExperimentKey)) explicit_experiment = true;
  }
  if (explicit_experiment && config.experiment != wanted) {
    throw dynsyn::ConfigError(opts.config_path + ": experiment: file says '" +
                              dynsyn::experiment_name(config.experiment) + "' but the subcommand is '" + subcommand +
                              "'");
  }
  config.experiment = wanted;
  if (opts.seed) config.seed = *opts.seed;
  if (opts.workers) config.workers = *opts.workers;
  if (!opts.out.empty()) config.out = opts.out;
  if (config.workers < 1) throw dynsyn::ConfigError("workers: must be at least 1");
  config.validate();
  return config;
}

int run_experiment(const std::string& subcommand, const Common& opts) {
  const dynsyn::SweepConfig config = load(subcommand, opts);
  switch (config.experiment) {
    case dynsyn::Experiment::Stochastic: {
      const dynsyn::StochasticTable table = dynsyn::stochastic_table(config, config.workers);
      const std::string csv = dynsyn::stochastic_csv(table);
      if (config.out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream(config.out) << csv;
      }
      size_t flagged = 0;
      for (const auto& row : table.rows) flagged += row.flagged ? 1 : 0;
      if (flagged > 0) {
        std::cerr << flagged << " of " << table.rows.size() << " rows deviate by more than 3 sigma\n";
        return 3;
      }
      return 0;
    }
    case dynsyn::Experiment::Collapse: {
      const dynsyn::CollapseRun run = dynsyn::collapse_cmd(config, config.workers);
      const auto& r = run.result;
      std::cout << std::setprecision(6) << "p_c = " << r.p_c << " +/- " << r.p_c_err << "\nnu = " << r.nu
                << " +/- " << r.nu_err << "\neps_min = " << r.eps_min << " (" << run.points.size() << " points)\n";
      if (r.on_boundary) std::cerr << "warning: optimum on the search-box boundary\n";
      return 0;
    }
    default: {
      if (config.out.empty()) throw dynsyn::ConfigError("out: required for sweeps (config key or --out)");
      std::signal(SIGINT, on_sigint);
      const dynsyn::SweepSummary s =
          dynsyn::run_sweep(config, {config.out, opts.resume, config.workers, true, &g_cancel});
      std::cerr << s.cells_run << " cells run, " << s.cells_skipped << " resumed, " << s.cells_total << " total\n";
      if (s.cancelled) {
        std::cerr << "interrupted; rerun with --resume to continue\n";
        return 130;
      }
      return 0;
    }
  }
}

int run_selfcheck(const std::string& scratch) {
  bool all = true;
  for (const auto& r : dynsyn::testing::run_selfcheck(scratch)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(1) << r.seconds
              << " s): " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid Clifford circuit simulations, Sign-Color decoding and finite-size scaling"};
  app.set_version_flag("--version", dynsyn::version_string());
  app.require_subcommand(1);

  Common opts;
  const std::vector<std::string> experiments = {"miet", "dt-kl", "dt-ul", "mean-tr", "stochastic", "collapse"};
  for (const std::string& name : experiments) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", opts.config_path, "config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", opts.seed, "master seed (overrides the config)");
    sub->add_option("--workers", opts.workers, "worker threads (overrides the config)");
    sub->add_option("--out", opts.out, "output path (overrides the config)");
    sub->add_flag("--resume", opts.resume, "continue a sweep recorded in OUT.manifest.json");
  }
  std::string scratch = "selfcheck-scratch";
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the oracle and property suites");
  selfcheck->add_option("--out", scratch, "scratch directory for the worker-invariance sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "selfcheck") return run_selfcheck(scratch);
    return run_experiment(name, opts);
  } catch (const dynsyn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const dynsyn::ResumeConflict& e) {
    std::cerr << "resume conflict: " << e.what() << "\n";
    return 2;
  } catch (const dynsyn::CsvError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
