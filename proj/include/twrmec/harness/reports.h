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

#ifndef TWRMEC_HARNESS_REPORTS_H_
#define TWRMEC_HARNESS_REPORTS_H_

// JSON views of the model types. Field names are part of the CLI contract.

#include "json.hpp"
#include "twrmec/outer_search.h"
#include "twrmec/system_model.h"

namespace twrmec {

nlohmann::json ToJson(const SystemParams& params);
nlohmann::json ToJson(const ChannelRealization& chan);
nlohmann::json ToJson(const Schedule& schedule);
nlohmann::json ToJson(const EnergyBreakdown& energy);

// Inverse of ToJson(Schedule); throws nlohmann::json::exception on missing
// fields.
Schedule ScheduleFromJson(const nlohmann::json& j);

// One solve as a report document:
//   {"status": "ok", "scheme", "candidate", "params", "channel", "schedule",
//    "energy", "diagnostics": {...}}
// or {"status": "infeasible", "error": ...} when no schedule meets the
// deadline.
nlohmann::json SolveSingle(const SystemParams& params, const ChannelRealization& chan,
                           const SearchConfig& search);

}  // namespace twrmec

#endif  // TWRMEC_HARNESS_REPORTS_H_
