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

#ifndef TWRMEC_HARNESS_SWEEP_H_
#define TWRMEC_HARNESS_SWEEP_H_

// Monte-Carlo energy-versus-deadline sweep. Every trial draws one channel
// realization and reuses it for all deadlines and all schemes (common random
// numbers).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "twrmec/outer_search.h"
#include "twrmec/system_model.h"

namespace twrmec {

struct SweepConfig {
  double t_min = 0.7;
  double t_max = 1.5;
  int t_points = 9;
  int n_trials = 500;
  std::uint64_t seed = 1;
  double avg_power_loss = 1e-6;
  SystemParams params;
  SearchConfig search;

  void Validate() const;
};

struct SweepRecord {
  double deadline_s = 0.0;
  Scheme scheme = Scheme::kProposed;
  double mean_energy = 0.0;  // over feasible trials; NaN if none
  double feasible_fraction = 0.0;
  int n_trials = 0;
  std::uint64_t seed = 0;
};

struct TrialOutcome {
  bool feasible = false;
  OptimalSolution solution;
};

struct SweepResult {
  std::vector<double> deadlines;
  // One row per (deadline, scheme): deadlines ascending, schemes in
  // kAllSchemes order.
  std::vector<SweepRecord> records;
  // outcomes[deadline][scheme][trial]
  std::vector<std::vector<std::vector<TrialOutcome>>> outcomes;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear grid t_min .. t_max with t_points entries (t_min if t_points == 1).
std::vector<double> DeadlineGrid(const SweepConfig& config);

// threads <= 0 uses std::thread::hardware_concurrency(). Output does not
// depend on the thread count.
SweepResult RunSweep(const SweepConfig& config, int threads = 0);

inline constexpr char kSweepCsvHeader[] =
    "deadline_T,scheme,mean_energy,feasible_fraction,n_trials,seed";

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRecord>& records);
std::string FormatSweepCsv(const std::vector<SweepRecord>& records);
// Throws IoError naming the path.
void WriteSweepCsvFile(const std::string& path,
                       const std::vector<SweepRecord>& records);

}  // namespace twrmec

#endif  // TWRMEC_HARNESS_SWEEP_H_
