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

#include "twrmec/harness/config.h"

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>

namespace twrmec {
namespace {

using Setter = std::function<void(const nlohmann::json&, HarnessConfig*)>;

double AsNumber(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int AsInt(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) {
    throw ConfigError("config key '" + key + "' must be an integer");
  }
  return v.get<int>();
}

std::uint64_t AsSeed(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_unsigned()) {
    throw ConfigError("config key '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

const std::map<std::string, Setter>& Setters() {
  static const auto* table = new std::map<std::string, Setter>{
      {"bandwidth_B", [](auto& v, auto* c) { c->sweep.params.bandwidth_hz = AsNumber(v, "bandwidth_B"); }},
      {"noise_power_sigma2", [](auto& v, auto* c) { c->sweep.params.noise_power_w = AsNumber(v, "noise_power_sigma2"); }},
      {"task_bits_L1", [](auto& v, auto* c) { c->sweep.params.task_bits_1 = AsNumber(v, "task_bits_L1"); }},
      {"task_bits_L2", [](auto& v, auto* c) { c->sweep.params.task_bits_2 = AsNumber(v, "task_bits_L2"); }},
      {"cycles_per_bit_k", [](auto& v, auto* c) { c->sweep.params.cycles_per_bit = AsNumber(v, "cycles_per_bit_k"); }},
      {"eff_cap_user_eta_u", [](auto& v, auto* c) { c->sweep.params.eff_cap_user = AsNumber(v, "eff_cap_user_eta_u"); }},
      {"eff_cap_relay_eta_r", [](auto& v, auto* c) { c->sweep.params.eff_cap_relay = AsNumber(v, "eff_cap_relay_eta_r"); }},
      {"cpu_user_Fu", [](auto& v, auto* c) { c->sweep.params.cpu_user_hz = AsNumber(v, "cpu_user_Fu"); }},
      {"cpu_relay_Fr", [](auto& v, auto* c) { c->sweep.params.cpu_relay_hz = AsNumber(v, "cpu_relay_Fr"); }},
      {"deadline_T", [](auto& v, auto* c) { c->sweep.params.deadline_s = AsNumber(v, "deadline_T"); }},
      {"pr_min", [](auto& v, auto* c) { c->sweep.search.pr_min = AsNumber(v, "pr_min"); }},
      {"pr_max", [](auto& v, auto* c) { c->sweep.search.pr_max = AsNumber(v, "pr_max"); }},
      {"grid_points", [](auto& v, auto* c) { c->sweep.search.grid_points = AsInt(v, "grid_points"); }},
      {"refine_iters", [](auto& v, auto* c) { c->sweep.search.refine_iters = AsInt(v, "refine_iters"); }},
      {"scheme",
       [](auto& v, auto* c) {
         if (!v.is_string()) throw ConfigError("config key 'scheme' must be a string");
         try {
           c->sweep.search.scheme = ParseScheme(v.template get<std::string>());
         } catch (const std::invalid_argument& e) {
           throw ConfigError(e.what());
         }
       }},
      {"t_min", [](auto& v, auto* c) { c->sweep.t_min = AsNumber(v, "t_min"); }},
      {"t_max", [](auto& v, auto* c) { c->sweep.t_max = AsNumber(v, "t_max"); }},
      {"t_points", [](auto& v, auto* c) { c->sweep.t_points = AsInt(v, "t_points"); }},
      {"n_trials", [](auto& v, auto* c) { c->sweep.n_trials = AsInt(v, "n_trials"); }},
      {"seed", [](auto& v, auto* c) { c->sweep.seed = AsSeed(v, "seed"); }},
      {"avg_power_loss", [](auto& v, auto* c) { c->sweep.avg_power_loss = AsNumber(v, "avg_power_loss"); }},
      {"instances", [](auto& v, auto* c) { c->validation.instances = AsInt(v, "instances"); }},
      {"tol", [](auto& v, auto* c) { c->validation.rel_tol = AsNumber(v, "tol"); }},
      {"oracle_pr_points", [](auto& v, auto* c) { c->validation.oracle.pr_points = AsInt(v, "oracle_pr_points"); }},
      {"oracle_alpha_points", [](auto& v, auto* c) { c->validation.oracle.alpha_points = AsInt(v, "oracle_alpha_points"); }},
      {"oracle_tau_points", [](auto& v, auto* c) { c->validation.oracle.tau_points = AsInt(v, "oracle_tau_points"); }},
  };
  return *table;
}

constexpr std::array<const char*, 4> kChannelKeys = {"gamma_1f", "gamma_2f", "gamma_1b",
                                                     "gamma_2b"};

}  // namespace

ValidationConfig HarnessConfig::Validation() const {
  ValidationConfig v = validation;
  v.params = sweep.params;
  v.search = sweep.search;
  v.seed = sweep.seed;
  v.avg_power_loss = sweep.avg_power_loss;
  return v;
}

void ApplyConfig(const nlohmann::json& doc, HarnessConfig* config) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  int channel_keys = 0;
  ChannelRealization chan = config->channel.value_or(ChannelRealization{});
  for (const auto& [key, value] : doc.items()) {
    if (key == "gamma_1f") {
      chan.gamma_1f = AsNumber(value, key);
    } else if (key == "gamma_2f") {
      chan.gamma_2f = AsNumber(value, key);
    } else if (key == "gamma_1b") {
      chan.gamma_1b = AsNumber(value, key);
    } else if (key == "gamma_2b") {
      chan.gamma_2b = AsNumber(value, key);
    } else {
      const auto it = Setters().find(key);
      if (it == Setters().end()) throw ConfigError("unknown config key '" + key + "'");
      it->second(value, config);
      continue;
    }
    ++channel_keys;
  }
  if (channel_keys != 0 && channel_keys != static_cast<int>(kChannelKeys.size())) {
    throw ConfigError("channel gains need all of gamma_1f, gamma_2f, gamma_1b, gamma_2b");
  }
  if (channel_keys != 0) config->channel = chan;
}

HarnessConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  HarnessConfig config;
  ApplyConfig(doc, &config);
  return config;
}

}  // namespace twrmec
