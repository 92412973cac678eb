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

#ifndef TWRMEC_HARNESS_VALIDATION_H_
#define TWRMEC_HARNESS_VALIDATION_H_

// Closed-form solver versus brute-force oracle on seeded Rayleigh instances.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "twrmec/oracle.h"
#include "twrmec/outer_search.h"

namespace twrmec {

struct InstanceCheck {
  std::uint64_t instance = 0;
  double deadline_s = 0.0;
  ChannelRealization chan;
  bool closed_form_feasible = false;
  bool oracle_feasible = false;
  ValidationReport report;  // meaningful when both are feasible
  bool passed = false;
  bool skipped = false;     // both infeasible
};

// Runs Solve and BruteForce on one instance and compares them.
InstanceCheck ValidateInstance(const SystemParams& params,
                               const ChannelRealization& chan, double rel_tol,
                               const SearchConfig& search = {},
                               const OracleConfig& oracle = {});

struct ValidationConfig {
  SystemParams params;
  SearchConfig search;
  OracleConfig oracle;
  std::uint64_t seed = 1;
  int instances = 50;
  double rel_tol = 0.01;
  double avg_power_loss = 1e-6;
  std::vector<double> deadlines{0.7, 0.9, 1.1, 1.3, 1.5};
};

struct ValidationSummary {
  std::vector<InstanceCheck> checks;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  double max_gap = 0.0;  // closed-form vs oracle, relative; negative is better
  double min_gap = 0.0;

  bool ok() const { return failed == 0; }
};

// Instance i uses the channel of trial i under `seed`, at every deadline.
ValidationSummary RunValidation(const ValidationConfig& config);

nlohmann::json ValidationSummaryToJson(const ValidationSummary& summary,
                                       const ValidationConfig& config);

}  // namespace twrmec

#endif  // TWRMEC_HARNESS_VALIDATION_H_
