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

#ifndef TWRMEC_ORACLE_H_
#define TWRMEC_ORACLE_H_

// Brute-force reference for the closed-form solver. Enumerates
// (P_r, alpha1, tau1) on a grid using only the system model: alpha2 from the
// coupling, tau3 from the broadcast rate, tau4 = max(t_u, t_r), and the rest
// of the block given to tau1 + tau2. No multipliers, no Lambert W, no case
// analysis. Deliberately does not include the inner allocator or the
// partition solver.

#include "twrmec/system_model.h"

namespace twrmec {

struct OracleConfig {
  int pr_points = 128;
  int alpha_points = 128;
  int tau_points = 128;
  double pr_min = 1e-4;
  double pr_max = 10.0;

  void Validate() const;
};

struct OracleResult {
  Schedule schedule;
  EnergyBreakdown energy;
};

// Throws std::runtime_error (OracleInfeasible) when no grid point leaves a
// positive offload budget.
class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OracleResult BruteForce(const SystemParams& params, const ChannelRealization& chan,
                        const OracleConfig& config);

// Same enumeration but tau1 and tau2 are gridded independently under
// tau1 + tau2 <= budget instead of spending the budget exactly. Used to spot
// check that the optimum sits on the deadline. `budget_slack` receives
// T - (tau1 + tau2 + tau3 + tau4) of the best point.
OracleResult BruteForceInequality(const SystemParams& params,
                                  const ChannelRealization& chan,
                                  const OracleConfig& config, double* budget_slack);

struct ValidationReport {
  double closed_form_energy = 0.0;
  double oracle_energy = 0.0;
  double gap = 0.0;  // (closed_form - oracle) / oracle
  bool passed = false;
};

// Pass iff closed_form <= oracle * (1 + rel_tol).
ValidationReport CompareEnergies(double closed_form_energy, double oracle_energy,
                                 double rel_tol);

}  // namespace twrmec

#endif  // TWRMEC_ORACLE_H_
