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

#include "twrmec/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "twrmec/kernels/offload_kernels.h"

namespace twrmec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> LogGrid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Slot layout for one (P_r, alpha1) grid point before the offload split.
struct Layout {
  double alpha1;
  double alpha2;
  double tau3;
  double tau4;
  double budget;
  double fixed_energy;  // E3 + 2 C_u + C_r
  double power_relay;
};

bool MakeLayout(const SystemParams& params, const ChannelRealization& chan,
                double power_relay, double alpha1, Layout* out) {
  const BroadcastQuantities bc = ComputeBroadcast(params, chan, power_relay, alpha1);
  if (!bc.feasible) return false;
  const double alpha2 = std::max(0.0, CoupledAlpha2(params, alpha1));
  const ComputeLoad load = ComputeTimesAndEnergies(params, alpha1, alpha2, bc.tau3);
  const double tau4 = std::max(load.user_time, load.relay_time);
  const double budget = params.deadline_s - bc.tau3 - tau4;
  if (!(budget > 0.0)) return false;
  *out = Layout{alpha1,  alpha2,
                bc.tau3, tau4,
                budget,  bc.energy + 2.0 * load.user_energy + load.relay_energy,
                bc.tau3 > 0.0 ? power_relay : 0.0};
  return true;
}

OracleResult Finish(const SystemParams& params, const ChannelRealization& chan,
                    const Layout& layout, double tau1, double tau2) {
  const double b = params.bandwidth_hz;
  OracleResult r;
  Schedule& s = r.schedule;
  s.alpha1 = layout.alpha1;
  s.alpha2 = layout.alpha2;
  s.tau1 = tau1;
  s.tau2 = tau2;
  s.tau3 = layout.tau3;
  s.tau4 = layout.tau4;
  s.power_user1 = PowerForDuration(tau1, params.task_bits_1, chan.gamma_1f, b);
  s.power_user2 = PowerForDuration(tau2, params.task_bits_2, chan.gamma_2f, b);
  s.power_relay = layout.power_relay;
  r.energy = EvaluateSchedule(params, chan, s);
  return r;
}

std::vector<double> AlphaGrid(const SystemParams& params, int n) {
  const double alpha_min = std::max(0.0, 1.0 - params.task_bits_2 / params.task_bits_1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = alpha_min + (1.0 - alpha_min) * i / (n - 1);
  g.back() = 1.0;
  return g;
}

}  // namespace

void OracleConfig::Validate() const {
  if (pr_points < 32 || alpha_points < 32 || tau_points < 32) {
    throw std::invalid_argument("oracle grid counts must be at least 32");
  }
  if (!(pr_min > 0.0) || !(pr_max > pr_min)) {
    throw std::invalid_argument("oracle relay power range must satisfy 0 < pr_min < pr_max");
  }
}

OracleResult BruteForce(const SystemParams& params, const ChannelRealization& chan,
                        const OracleConfig& config) {
  params.Validate();
  chan.Validate();
  config.Validate();

  const std::vector<double> powers = LogGrid(config.pr_min, config.pr_max, config.pr_points);
  const std::vector<double> alphas = AlphaGrid(params, config.alpha_points);
  std::vector<double> fractions(config.tau_points);
  for (int j = 0; j < config.tau_points; ++j) {
    fractions[j] = static_cast<double>(j + 1) / (config.tau_points + 1);
  }
  const kernels::PerspectiveTerm first{params.task_bits_1 / params.bandwidth_hz,
                                       1.0 / chan.gamma_1f};
  const kernels::PerspectiveTerm second{params.task_bits_2 / params.bandwidth_hz,
                                        1.0 / chan.gamma_2f};

  double best = kInf;
  Layout best_layout{};
  std::size_t best_j = 0;
  for (double pr : powers) {
    for (double alpha1 : alphas) {
      Layout layout;
      if (!MakeLayout(params, chan, pr, alpha1, &layout)) continue;
      const kernels::SplitMin m =
          kernels::MinSplitEnergy(layout.budget, fractions, first, second);
      const double e = m.energy + layout.fixed_energy;
      if (e < best) {
        best = e;
        best_layout = layout;
        best_j = m.index;
      }
    }
  }
  if (best == kInf) {
    throw OracleInfeasible("no grid point meets the deadline");
  }
  const double tau1 = best_layout.budget * fractions[best_j];
  return Finish(params, chan, best_layout, tau1, best_layout.budget - tau1);
}

OracleResult BruteForceInequality(const SystemParams& params,
                                  const ChannelRealization& chan,
                                  const OracleConfig& config, double* budget_slack) {
  params.Validate();
  chan.Validate();
  config.Validate();

  const std::vector<double> powers = LogGrid(config.pr_min, config.pr_max, config.pr_points);
  const std::vector<double> alphas = AlphaGrid(params, config.alpha_points);
  const int n = config.tau_points;
  const double b = params.bandwidth_hz;

  double best = kInf;
  Layout best_layout{};
  double best_t1 = 0.0;
  double best_t2 = 0.0;
  for (double pr : powers) {
    for (double alpha1 : alphas) {
      Layout layout;
      if (!MakeLayout(params, chan, pr, alpha1, &layout)) continue;
      for (int i = 1; i <= n; ++i) {
        const double t1 = layout.budget * i / n;
        const double e1 = OffloadEnergy(t1, params.task_bits_1, chan.gamma_1f, b);
        for (int j = 1; i + j <= n; ++j) {
          const double t2 = layout.budget * j / n;
          const double e =
              e1 + OffloadEnergy(t2, params.task_bits_2, chan.gamma_2f, b) +
              layout.fixed_energy;
          if (e < best) {
            best = e;
            best_layout = layout;
            best_t1 = t1;
            best_t2 = t2;
          }
        }
      }
    }
  }
  if (best == kInf) {
    throw OracleInfeasible("no grid point meets the deadline");
  }
  OracleResult r = Finish(params, chan, best_layout, best_t1, best_t2);
  if (budget_slack != nullptr) {
    *budget_slack = params.deadline_s - r.schedule.TotalDuration();
  }
  return r;
}

ValidationReport CompareEnergies(double closed_form_energy, double oracle_energy,
                                 double rel_tol) {
  ValidationReport r;
  r.closed_form_energy = closed_form_energy;
  r.oracle_energy = oracle_energy;
  r.gap = (closed_form_energy - oracle_energy) / oracle_energy;
  r.passed = closed_form_energy <= oracle_energy * (1.0 + rel_tol);
  return r;
}

}  // namespace twrmec
