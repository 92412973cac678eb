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

#ifndef TWRMEC_HARNESS_CONFIG_H_
#define TWRMEC_HARNESS_CONFIG_H_

// Flat JSON configuration shared by the CLI subcommands. Every key is
// optional; missing keys keep the defaults of the corresponding structs.
//
//   system:   bandwidth_B noise_power_sigma2 task_bits_L1 task_bits_L2
//             cycles_per_bit_k eff_cap_user_eta_u eff_cap_relay_eta_r
//             cpu_user_Fu cpu_relay_Fr deadline_T
//   search:   pr_min pr_max grid_points refine_iters scheme
//   sweep:    t_min t_max t_points n_trials seed avg_power_loss
//   validate: instances tol oracle_pr_points oracle_alpha_points
//             oracle_tau_points
//   channel:  gamma_1f gamma_2f gamma_1b gamma_2b (all four or none)
//
// Unknown keys and wrongly typed values are rejected.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "twrmec/harness/sweep.h"
#include "twrmec/harness/validation.h"

namespace twrmec {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HarnessConfig {
  SweepConfig sweep;  // carries params and search
  ValidationConfig validation;
  std::optional<ChannelRealization> channel;

  // The validation view shares params, search, seed and avg_power_loss with
  // the sweep view.
  ValidationConfig Validation() const;
};

// Throws ConfigError.
void ApplyConfig(const nlohmann::json& doc, HarnessConfig* config);
HarnessConfig LoadConfigFile(const std::string& path);

}  // namespace twrmec

#endif  // TWRMEC_HARNESS_CONFIG_H_
