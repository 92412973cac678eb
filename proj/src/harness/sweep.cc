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

#include "twrmec/harness/sweep.h"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "twrmec/harness/channel_sampler.h"
#include "twrmec/inner_allocator.h"

namespace twrmec {
namespace {

constexpr std::size_t kNumSchemes = std::size(kAllSchemes);

// All deadlines and schemes for one channel draw.
void RunTrial(const SweepConfig& config, const std::vector<double>& deadlines,
              std::uint64_t trial, SweepResult* result) {
  std::mt19937_64 rng = TrialGenerator(config.seed, trial);
  const ChannelRealization chan =
      SampleChannels(rng, config.avg_power_loss, config.params.noise_power_w);
  for (std::size_t t = 0; t < deadlines.size(); ++t) {
    SystemParams params = config.params;
    params.deadline_s = deadlines[t];
    for (std::size_t s = 0; s < kNumSchemes; ++s) {
      SearchConfig search = config.search;
      search.scheme = kAllSchemes[s];
      TrialOutcome& out = result->outcomes[t][s][trial];
      try {
        out.solution = Solve(params, chan, search);
        out.feasible = true;
      } catch (const InfeasibleError&) {
        out.feasible = false;
      }
    }
  }
}

}  // namespace

void SweepConfig::Validate() const {
  if (!(t_min > 0.0) || !(t_max >= t_min)) {
    throw std::invalid_argument("deadline range must satisfy 0 < t_min <= t_max");
  }
  if (t_points < 2) throw std::invalid_argument("t_points must be at least 2");
  if (n_trials < 1) throw std::invalid_argument("n_trials must be at least 1");
  if (!(avg_power_loss > 0.0)) {
    throw std::invalid_argument("avg_power_loss must be positive");
  }
  params.Validate();
  search.Validate();
}

std::vector<double> DeadlineGrid(const SweepConfig& config) {
  std::vector<double> grid(config.t_points);
  for (int i = 0; i < config.t_points; ++i) {
    grid[i] = config.t_points == 1
                  ? config.t_min
                  : config.t_min + (config.t_max - config.t_min) * i / (config.t_points - 1);
  }
  return grid;
}

SweepResult RunSweep(const SweepConfig& config, int threads) {
  config.Validate();
  SweepResult result;
  result.deadlines = DeadlineGrid(config);
  const auto n_trials = static_cast<std::size_t>(config.n_trials);
  result.outcomes.assign(
      result.deadlines.size(),
      std::vector<std::vector<TrialOutcome>>(kNumSchemes,
                                             std::vector<TrialOutcome>(n_trials)));

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.n_trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t trial = next++; trial < n_trials; trial = next++) {
      RunTrial(config, result.deadlines, trial, &result);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t t = 0; t < result.deadlines.size(); ++t) {
    for (std::size_t s = 0; s < kNumSchemes; ++s) {
      double sum = 0.0;
      int feasible = 0;
      for (const TrialOutcome& o : result.outcomes[t][s]) {
        if (!o.feasible) continue;
        sum += o.solution.energy.total;
        ++feasible;
      }
      SweepRecord r;
      r.deadline_s = result.deadlines[t];
      r.scheme = kAllSchemes[s];
      r.mean_energy =
          feasible > 0 ? sum / feasible : std::numeric_limits<double>::quiet_NaN();
      r.feasible_fraction = static_cast<double>(feasible) / config.n_trials;
      r.n_trials = config.n_trials;
      r.seed = config.seed;
      result.records.push_back(r);
    }
  }
  return result;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  char line[256];
  for (const SweepRecord& r : records) {
    const std::string scheme(SchemeName(r.scheme));
    std::snprintf(line, sizeof(line), "%.10g,%s,%.17g,%.10g,%d,%" PRIu64 "\n",
                  r.deadline_s, scheme.c_str(), r.mean_energy, r.feasible_fraction,
                  r.n_trials, r.seed);
    out << line;
  }
}

std::string FormatSweepCsv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  WriteSweepCsv(os, records);
  return os.str();
}

void WriteSweepCsvFile(const std::string& path,
                       const std::vector<SweepRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  WriteSweepCsv(out, records);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace twrmec
