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

#include "twrmec/harness/validation.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "twrmec/harness/channel_sampler.h"
#include "twrmec/harness/reports.h"
#include "twrmec/inner_allocator.h"

namespace twrmec {

InstanceCheck ValidateInstance(const SystemParams& params,
                               const ChannelRealization& chan, double rel_tol,
                               const SearchConfig& search,
                               const OracleConfig& oracle) {
  InstanceCheck c;
  c.deadline_s = params.deadline_s;
  c.chan = chan;
  double closed = std::numeric_limits<double>::infinity();
  double brute = std::numeric_limits<double>::infinity();
  try {
    SearchConfig proposed = search;
    proposed.scheme = Scheme::kProposed;
    closed = Solve(params, chan, proposed).energy.total;
    c.closed_form_feasible = true;
  } catch (const InfeasibleError&) {
  }
  try {
    brute = BruteForce(params, chan, oracle).energy.total;
    c.oracle_feasible = true;
  } catch (const OracleInfeasible&) {
  }

  if (!c.closed_form_feasible && !c.oracle_feasible) {
    c.skipped = true;
    c.passed = true;
  } else if (!c.closed_form_feasible) {
    c.passed = false;
  } else if (!c.oracle_feasible) {
    // The continuous search may reach points the grid misses.
    c.passed = true;
  } else {
    c.report = CompareEnergies(closed, brute, rel_tol);
    c.passed = c.report.passed;
  }
  return c;
}

ValidationSummary RunValidation(const ValidationConfig& config) {
  config.params.Validate();
  config.search.Validate();
  config.oracle.Validate();
  if (config.instances < 1) throw std::invalid_argument("instances must be at least 1");
  if (!(config.rel_tol >= 0.0)) throw std::invalid_argument("tol must be nonnegative");
  if (!(config.avg_power_loss > 0.0)) {
    throw std::invalid_argument("avg_power_loss must be positive");
  }
  if (config.deadlines.empty()) throw std::invalid_argument("no deadlines to validate");
  for (double t : config.deadlines) {
    if (!(t > 0.0)) throw std::invalid_argument("deadlines must be positive");
  }
  ValidationSummary summary;
  summary.max_gap = -std::numeric_limits<double>::infinity();
  summary.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < config.instances; ++i) {
    std::mt19937_64 rng = TrialGenerator(config.seed, static_cast<std::uint64_t>(i));
    const ChannelRealization chan =
        SampleChannels(rng, config.avg_power_loss, config.params.noise_power_w);
    for (double deadline : config.deadlines) {
      SystemParams params = config.params;
      params.deadline_s = deadline;
      InstanceCheck c =
          ValidateInstance(params, chan, config.rel_tol, config.search, config.oracle);
      c.instance = static_cast<std::uint64_t>(i);
      if (c.skipped) {
        ++summary.skipped;
      } else if (c.passed) {
        ++summary.passed;
      } else {
        ++summary.failed;
      }
      if (c.closed_form_feasible && c.oracle_feasible) {
        summary.max_gap = std::max(summary.max_gap, c.report.gap);
        summary.min_gap = std::min(summary.min_gap, c.report.gap);
      }
      summary.checks.push_back(c);
    }
  }
  return summary;
}

nlohmann::json ValidationSummaryToJson(const ValidationSummary& summary,
                                       const ValidationConfig& config) {
  nlohmann::json cases = nlohmann::json::array();
  for (const InstanceCheck& c : summary.checks) {
    nlohmann::json j;
    j["instance"] = c.instance;
    j["deadline_T"] = c.deadline_s;
    j["channel"] = ToJson(c.chan);
    j["closed_form_feasible"] = c.closed_form_feasible;
    j["oracle_feasible"] = c.oracle_feasible;
    if (c.closed_form_feasible && c.oracle_feasible) {
      j["closed_form_energy"] = c.report.closed_form_energy;
      j["oracle_energy"] = c.report.oracle_energy;
      j["gap"] = c.report.gap;
    }
    j["passed"] = c.passed;
    cases.push_back(std::move(j));
  }
  nlohmann::json out;
  out["instances"] = config.instances;
  out["seed"] = config.seed;
  out["tol"] = config.rel_tol;
  out["deadlines"] = config.deadlines;
  out["passed"] = summary.passed;
  out["failed"] = summary.failed;
  out["skipped"] = summary.skipped;
  if (summary.passed + summary.failed > 0 && summary.min_gap <= summary.max_gap) {
    out["max_gap"] = summary.max_gap;
    out["min_gap"] = summary.min_gap;
  }
  out["ok"] = summary.ok();
  out["cases"] = std::move(cases);
  return out;
}

}  // namespace twrmec
