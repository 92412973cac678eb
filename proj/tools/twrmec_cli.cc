// Copyright 2026 The twrmec Authors
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

// twrmec: solve, sweep and validate the two-way relay edge-computing energy
// problem.
//
// Exit codes: 0 success, 1 infeasible, 2 validation failure, 3 I/O or
// configuration error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twrmec/harness/channel_sampler.h"
#include "twrmec/harness/config.h"
#include "twrmec/harness/reports.h"
#include "twrmec/harness/sweep.h"
#include "twrmec/harness/validation.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitValidationFailed = 2;
constexpr int kExitConfigError = 3;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string scheme = "proposed";
  std::string output = "json";
  std::optional<int> trials;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<int> t_points;
  std::string out_path;
  std::optional<int> instances;
  std::optional<double> tol;
  int threads = 0;
};

twrmec::HarnessConfig LoadConfig(const Options& opts) {
  twrmec::HarnessConfig config;
  if (!opts.config_path.empty()) config = twrmec::LoadConfigFile(opts.config_path);
  if (opts.seed) config.sweep.seed = *opts.seed;
  if (opts.trials) config.sweep.n_trials = *opts.trials;
  if (opts.t_min) config.sweep.t_min = *opts.t_min;
  if (opts.t_max) config.sweep.t_max = *opts.t_max;
  if (opts.t_points) config.sweep.t_points = *opts.t_points;
  if (opts.instances) config.validation.instances = *opts.instances;
  if (opts.tol) config.validation.rel_tol = *opts.tol;
  return config;
}

// Channel precedence: --seed draws trial 0 of that seed; otherwise the
// config's gamma_* keys; otherwise every link at its mean gain.
twrmec::ChannelRealization PickChannel(const Options& opts,
                                       const twrmec::HarnessConfig& config) {
  const auto& sweep = config.sweep;
  if (opts.seed) {
    std::mt19937_64 rng = twrmec::TrialGenerator(*opts.seed, 0);
    return twrmec::SampleChannels(rng, sweep.avg_power_loss, sweep.params.noise_power_w);
  }
  if (config.channel) return *config.channel;
  const double mean_gamma = sweep.avg_power_loss / sweep.params.noise_power_w;
  return {mean_gamma, mean_gamma, mean_gamma, mean_gamma};
}

int RunSolve(const Options& opts) {
  twrmec::HarnessConfig config = LoadConfig(opts);
  if (opts.output != "json") {
    throw twrmec::ConfigError("unsupported --output '" + opts.output + "'");
  }
  twrmec::SearchConfig search = config.sweep.search;
  try {
    search.scheme = twrmec::ParseScheme(opts.scheme);
    config.sweep.params.Validate();
    search.Validate();
  } catch (const std::invalid_argument& e) {
    throw twrmec::ConfigError(e.what());
  }
  const twrmec::ChannelRealization chan = PickChannel(opts, config);
  const nlohmann::json report = twrmec::SolveSingle(config.sweep.params, chan, search);
  std::cout << report.dump(2) << '\n';
  return report.at("status") == "ok" ? kExitOk : kExitInfeasible;
}

int RunSweepCommand(const Options& opts) {
  twrmec::HarnessConfig config = LoadConfig(opts);
  try {
    config.sweep.Validate();
  } catch (const std::invalid_argument& e) {
    throw twrmec::ConfigError(e.what());
  }
  const twrmec::SweepResult result = twrmec::RunSweep(config.sweep, opts.threads);
  if (opts.out_path.empty()) {
    twrmec::WriteSweepCsv(std::cout, result.records);
  } else {
    twrmec::WriteSweepCsvFile(opts.out_path, result.records);
    std::cerr << "wrote " << result.records.size() << " rows to " << opts.out_path << '\n';
  }
  return kExitOk;
}

int RunValidate(const Options& opts) {
  const twrmec::HarnessConfig config = LoadConfig(opts);
  const twrmec::ValidationConfig vc = config.Validation();
  twrmec::ValidationSummary summary;
  try {
    summary = twrmec::RunValidation(vc);
  } catch (const std::invalid_argument& e) {
    throw twrmec::ConfigError(e.what());
  }
  std::cout << twrmec::ValidationSummaryToJson(summary, vc).dump(2) << '\n';
  return summary.ok() ? kExitOk : kExitValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-optimal scheduling for two-way relay edge computing"};
  app.require_subcommand(1);
  Options opts;

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance, print a JSON report");
  solve->add_option("--config", opts.config_path, "JSON config file");
  solve->add_option("--seed", opts.seed, "Draw the channel from this seed (trial 0)");
  solve->add_option("--scheme", opts.scheme,
                    "proposed | relay_computing | local_computing");
  solve->add_option("--output", opts.output, "Report format (json)");

  CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo energy vs deadline sweep");
  sweep->add_option("--config", opts.config_path, "JSON config file");
  sweep->add_option("--seed", opts.seed, "Base seed");
  sweep->add_option("--trials", opts.trials, "Channel draws per deadline");
  sweep->add_option("--t-min", opts.t_min, "Smallest deadline (s)");
  sweep->add_option("--t-max", opts.t_max, "Largest deadline (s)");
  sweep->add_option("--t-points", opts.t_points, "Number of deadlines");
  sweep->add_option("--out", opts.out_path, "CSV output path (default stdout)");
  sweep->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");

  CLI::App* validate =
      app.add_subcommand("validate", "Compare the closed-form solver to the grid oracle");
  validate->add_option("--config", opts.config_path, "JSON config file");
  validate->add_option("--instances", opts.instances, "Number of seeded channel draws");
  validate->add_option("--tol", opts.tol, "Relative tolerance against the oracle");
  validate->add_option("--seed", opts.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*solve) return RunSolve(opts);
    if (*sweep) return RunSweepCommand(opts);
    if (*validate) return RunValidate(opts);
  } catch (const twrmec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const twrmec::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
