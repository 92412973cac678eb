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

#ifndef TWRMEC_OUTER_SEARCH_H_
#define TWRMEC_OUTER_SEARCH_H_

// Search over the relay transmit power around the fixed-P_r partition solver,
// plus the two reference schemes: everything computed at the relay
// (alpha1 = alpha2 = 1) and everything computed by the users (alpha1 at its
// lower bound, alpha2 = 0 for equal task sizes).

#include <string_view>

#include "twrmec/partition_solver.h"
#include "twrmec/system_model.h"

namespace twrmec {

enum class Scheme { kProposed, kRelayComputing, kLocalComputing };

inline constexpr Scheme kAllSchemes[] = {Scheme::kProposed, Scheme::kRelayComputing,
                                         Scheme::kLocalComputing};

std::string_view SchemeName(Scheme scheme);
// Throws std::invalid_argument for unknown names.
Scheme ParseScheme(std::string_view name);

struct SearchConfig {
  double pr_min = 1e-4;  // W
  double pr_max = 10.0;  // W
  int grid_points = 200;
  int refine_iters = 40;
  Scheme scheme = Scheme::kProposed;

  void Validate() const;
};

struct OptimalSolution {
  Schedule schedule;
  EnergyBreakdown energy;
  Scheme scheme = Scheme::kProposed;
  CandidateLabel candidate = CandidateLabel::kAlphaZero;
};

// Log-spaced P_r grid, then golden-section refinement in log P_r between the
// neighbours of the best grid point. Dispatches to SolveBaseline for the
// reference schemes. Throws InfeasibleError when no P_r is feasible.
OptimalSolution Solve(const SystemParams& params, const ChannelRealization& chan,
                      const SearchConfig& config);

OptimalSolution SolveBaseline(const SystemParams& params,
                              const ChannelRealization& chan, Scheme scheme,
                              const SearchConfig& config);

}  // namespace twrmec

#endif  // TWRMEC_OUTER_SEARCH_H_
