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

#include "twrmec/harness/reports.h"

#include <cmath>
#include <string>

#include "twrmec/inner_allocator.h"

namespace twrmec {

nlohmann::json ToJson(const SystemParams& p) {
  return {{"bandwidth_B", p.bandwidth_hz},
          {"noise_power_sigma2", p.noise_power_w},
          {"task_bits_L1", p.task_bits_1},
          {"task_bits_L2", p.task_bits_2},
          {"cycles_per_bit_k", p.cycles_per_bit},
          {"eff_cap_user_eta_u", p.eff_cap_user},
          {"eff_cap_relay_eta_r", p.eff_cap_relay},
          {"cpu_user_Fu", p.cpu_user_hz},
          {"cpu_relay_Fr", p.cpu_relay_hz},
          {"deadline_T", p.deadline_s}};
}

nlohmann::json ToJson(const ChannelRealization& c) {
  return {{"gamma_1f", c.gamma_1f},
          {"gamma_2f", c.gamma_2f},
          {"gamma_1b", c.gamma_1b},
          {"gamma_2b", c.gamma_2b}};
}

nlohmann::json ToJson(const Schedule& s) {
  return {{"alpha1", s.alpha1},
          {"alpha2", s.alpha2},
          {"tau1", s.tau1},
          {"tau2", s.tau2},
          {"tau3", s.tau3},
          {"tau4", s.tau4},
          {"power_user1_P1", s.power_user1},
          {"power_user2_P2", s.power_user2},
          {"power_relay_Pr", s.power_relay}};
}

nlohmann::json ToJson(const EnergyBreakdown& e) {
  return {{"e1_offload", e.e1_offload},
          {"e2_offload", e.e2_offload},
          {"e3_broadcast", e.e3_broadcast},
          {"cu_local", e.cu_local},
          {"cr_relay", e.cr_relay},
          {"total", e.total}};
}

Schedule ScheduleFromJson(const nlohmann::json& j) {
  Schedule s;
  s.alpha1 = j.at("alpha1").get<double>();
  s.alpha2 = j.at("alpha2").get<double>();
  s.tau1 = j.at("tau1").get<double>();
  s.tau2 = j.at("tau2").get<double>();
  s.tau3 = j.at("tau3").get<double>();
  s.tau4 = j.at("tau4").get<double>();
  s.power_user1 = j.at("power_user1_P1").get<double>();
  s.power_user2 = j.at("power_user2_P2").get<double>();
  s.power_relay = j.at("power_relay_Pr").get<double>();
  return s;
}

nlohmann::json SolveSingle(const SystemParams& params, const ChannelRealization& chan,
                           const SearchConfig& search) {
  nlohmann::json report;
  report["scheme"] = std::string(SchemeName(search.scheme));
  report["params"] = ToJson(params);
  report["channel"] = ToJson(chan);
  OptimalSolution sol;
  try {
    sol = Solve(params, chan, search);
  } catch (const InfeasibleError& e) {
    report["status"] = "infeasible";
    report["error"] = e.what();
    return report;
  }
  report["status"] = "ok";
  report["candidate"] = std::string(CandidateName(sol.candidate));
  report["schedule"] = ToJson(sol.schedule);
  report["energy"] = ToJson(sol.energy);

  const Schedule& s = sol.schedule;
  const FeasibilityVerdict verdict =
      CheckFeasible(params, chan, s, 1e-9 * params.deadline_s);
  nlohmann::json violations = nlohmann::json::array();
  for (Constraint c : verdict.violations) violations.push_back(std::string(ConstraintName(c)));
  report["diagnostics"] = {
      {"feasible", verdict.feasible()},
      {"violations", violations},
      {"total_duration", s.TotalDuration()},
      {"deadline_slack", params.deadline_s - s.TotalDuration()},
      {"coupling_residual",
       (1.0 - s.alpha1) * params.task_bits_1 - (1.0 - s.alpha2) * params.task_bits_2},
  };
  return report;
}

}  // namespace twrmec
