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

#include "twrmec/system_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twrmec/kernels/offload_kernels.h"

namespace twrmec {
namespace {

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite, got " +
                                std::to_string(value));
  }
}

bool CloseRelative(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) ||
         std::abs(a - b) <= std::numeric_limits<double>::min();
}

}  // namespace

void SystemParams::Validate() const {
  RequirePositive(bandwidth_hz, "bandwidth_B");
  RequirePositive(noise_power_w, "noise_power_sigma2");
  RequirePositive(task_bits_1, "task_bits_L1");
  RequirePositive(task_bits_2, "task_bits_L2");
  RequirePositive(cycles_per_bit, "cycles_per_bit_k");
  RequirePositive(eff_cap_user, "eff_cap_user_eta_u");
  RequirePositive(eff_cap_relay, "eff_cap_relay_eta_r");
  RequirePositive(cpu_user_hz, "cpu_user_Fu");
  RequirePositive(cpu_relay_hz, "cpu_relay_Fr");
  RequirePositive(deadline_s, "deadline_T");
  if (task_bits_1 < 1.0 || task_bits_2 < 1.0) {
    throw std::invalid_argument("task lengths must be at least one bit");
  }
}

void ChannelRealization::Validate() const {
  RequirePositive(gamma_1f, "gamma_1f");
  RequirePositive(gamma_2f, "gamma_2f");
  RequirePositive(gamma_1b, "gamma_1b");
  RequirePositive(gamma_2b, "gamma_2b");
}

double ChannelRealization::BackwardGamma() const {
  return std::min(gamma_1b, gamma_2b);
}

double OffloadRate(double power_w, double gamma, double bandwidth_hz) {
  if (power_w < 0.0 || !(gamma > 0.0) || !(bandwidth_hz > 0.0)) {
    throw std::domain_error("OffloadRate: requires power >= 0, gamma > 0, B > 0");
  }
  return bandwidth_hz * std::log1p(power_w * gamma) / std::numbers::ln2;
}

double PowerForDuration(double tau_s, double bits, double gamma,
                        double bandwidth_hz) {
  if (!(tau_s > 0.0)) {
    throw std::domain_error("PowerForDuration: duration must be positive");
  }
  return kernels::Exp2m1(bits / (bandwidth_hz * tau_s)) / gamma;
}

double OffloadEnergy(double tau_s, double bits, double gamma,
                     double bandwidth_hz) {
  if (!(tau_s > 0.0)) {
    throw std::domain_error("OffloadEnergy: duration must be positive");
  }
  return kernels::PerspectiveEnergy(tau_s, {bits / bandwidth_hz, 1.0 / gamma});
}

double OffloadEnergySlope(double tau_s, double bits, double gamma,
                          double bandwidth_hz) {
  if (!(tau_s > 0.0)) {
    throw std::domain_error("OffloadEnergySlope: duration must be positive");
  }
  const double y = bits / (bandwidth_hz * tau_s) * std::numbers::ln2;
  double g;
  if (y < 0.5) {
    // e^y (y - 1) + 1 = sum_{n>=2} (n - 1) y^n / n!, cancellation-free.
    g = 0.0;
    double term = y;  // y^n / n!
    for (int n = 2; n < 30; ++n) {
      term *= y / n;
      g += (n - 1) * term;
    }
  } else {
    g = std::exp(y) * (y - 1.0) + 1.0;
  }
  return -g / gamma;
}

double CoupledAlpha2(const SystemParams& params, double alpha1) {
  const double l1 = params.task_bits_1;
  const double l2 = params.task_bits_2;
  if (l1 == l2) return alpha1;
  return (alpha1 * l1 + (l2 - l1)) / l2;
}

BroadcastQuantities ComputeBroadcast(const SystemParams& params,
                                     const ChannelRealization& chan,
                                     double power_relay, double alpha1) {
  if (power_relay < 0.0 || alpha1 < 0.0 || alpha1 > 1.0) {
    throw std::domain_error("ComputeBroadcast: requires P_r >= 0, alpha1 in [0, 1]");
  }
  BroadcastQuantities out;
  out.rate = std::min(OffloadRate(power_relay, chan.gamma_1b, params.bandwidth_hz),
                      OffloadRate(power_relay, chan.gamma_2b, params.bandwidth_hz));
  const double bits = (1.0 - alpha1) * params.task_bits_1;
  if (bits == 0.0) return out;
  if (out.rate == 0.0) {
    out.tau3 = std::numeric_limits<double>::infinity();
    out.energy = std::numeric_limits<double>::infinity();
    out.feasible = false;
    return out;
  }
  out.tau3 = bits / out.rate;
  out.energy = out.tau3 * power_relay;
  return out;
}

ComputeLoad ComputeTimesAndEnergies(const SystemParams& params, double alpha1,
                                    double alpha2, double tau3) {
  const double k = params.cycles_per_bit;
  const double user_bits = (1.0 - alpha1) * params.task_bits_1;
  const double relay_bits = alpha1 * params.task_bits_1 + alpha2 * params.task_bits_2;
  ComputeLoad load;
  load.user_time = k * user_bits / params.cpu_user_hz;
  load.relay_time = std::max(0.0, k * relay_bits / params.cpu_relay_hz - tau3);
  load.user_energy =
      k * user_bits * params.eff_cap_user * params.cpu_user_hz * params.cpu_user_hz;
  load.relay_energy =
      k * relay_bits * params.eff_cap_relay * params.cpu_relay_hz * params.cpu_relay_hz;
  return load;
}

EnergyBreakdown EvaluateSchedule(const SystemParams& params,
                                 const ChannelRealization& chan,
                                 const Schedule& s) {
  constexpr double kPowerTolerance = 1e-9;
  const double b = params.bandwidth_hz;

  const double p1 = PowerForDuration(s.tau1, params.task_bits_1, chan.gamma_1f, b);
  const double p2 = PowerForDuration(s.tau2, params.task_bits_2, chan.gamma_2f, b);
  if (!CloseRelative(p1, s.power_user1, kPowerTolerance) ||
      !CloseRelative(p2, s.power_user2, kPowerTolerance)) {
    throw ScheduleInconsistency("stored user powers do not match slot durations");
  }

  EnergyBreakdown e;
  e.e1_offload = OffloadEnergy(s.tau1, params.task_bits_1, chan.gamma_1f, b);
  e.e2_offload = OffloadEnergy(s.tau2, params.task_bits_2, chan.gamma_2f, b);

  const double broadcast_bits = (1.0 - s.alpha1) * params.task_bits_1;
  if (broadcast_bits > 0.0) {
    const double gamma_b = chan.BackwardGamma();
    const double pr = PowerForDuration(s.tau3, broadcast_bits, gamma_b, b);
    if (!CloseRelative(pr, s.power_relay, kPowerTolerance)) {
      throw ScheduleInconsistency("stored relay power does not match broadcast slot");
    }
    e.e3_broadcast = OffloadEnergy(s.tau3, broadcast_bits, gamma_b, b);
  }

  const ComputeLoad load = ComputeTimesAndEnergies(params, s.alpha1, s.alpha2, s.tau3);
  e.cu_local = load.user_energy;
  e.cr_relay = load.relay_energy;
  e.total = e.e1_offload + e.e2_offload + e.e3_broadcast + 2.0 * e.cu_local + e.cr_relay;
  return e;
}

std::string_view ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kCoupling:
      return "coupling";
    case Constraint::kAlphaBounds:
      return "alpha_bounds";
    case Constraint::kNonnegativity:
      return "nonnegativity";
    case Constraint::kBroadcastRate:
      return "broadcast_rate";
    case Constraint::kComputeTime:
      return "compute_time";
    case Constraint::kDeadline:
      return "deadline";
  }
  return "unknown";
}

FeasibilityVerdict CheckFeasible(const SystemParams& params,
                                 const ChannelRealization& chan,
                                 const Schedule& s, double tol_abs) {
  FeasibilityVerdict v;
  const double l1 = params.task_bits_1;
  const double l2 = params.task_bits_2;

  if (std::abs((1.0 - s.alpha1) * l1 - (1.0 - s.alpha2) * l2) > 1e-12 * l1) {
    v.violations.push_back(Constraint::kCoupling);
  }
  const bool alphas_ok = s.alpha1 >= 0.0 && s.alpha1 <= 1.0 &&
                         s.alpha2 >= 0.0 && s.alpha2 <= 1.0;
  if (!alphas_ok) v.violations.push_back(Constraint::kAlphaBounds);
  if (s.tau1 < 0.0 || s.tau2 < 0.0 || s.tau3 < 0.0 || s.tau4 < 0.0 ||
      s.power_user1 < 0.0 || s.power_user2 < 0.0 || s.power_relay < 0.0) {
    v.violations.push_back(Constraint::kNonnegativity);
  }
  if (!alphas_ok || s.power_relay < 0.0 || s.tau3 < 0.0) return v;

  const double broadcast_bits = (1.0 - s.alpha1) * l1;
  if (broadcast_bits > 0.0) {
    const double rate = std::min(OffloadRate(s.power_relay, chan.gamma_1b, params.bandwidth_hz),
                                 OffloadRate(s.power_relay, chan.gamma_2b, params.bandwidth_hz));
    if (rate * s.tau3 < broadcast_bits * (1.0 - 1e-9)) {
      v.violations.push_back(Constraint::kBroadcastRate);
    }
  }
  const ComputeLoad load = ComputeTimesAndEnergies(params, s.alpha1, s.alpha2, s.tau3);
  if (s.tau4 < std::max(load.user_time, load.relay_time) - tol_abs) {
    v.violations.push_back(Constraint::kComputeTime);
  }
  if (s.TotalDuration() > params.deadline_s + tol_abs) {
    v.violations.push_back(Constraint::kDeadline);
  }
  return v;
}

}  // namespace twrmec
