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

#ifndef TWRMEC_SYSTEM_MODEL_H_
#define TWRMEC_SYSTEM_MODEL_H_

// Scenario data and the physical/energy model of a two-user two-way relay
// with an edge server at the relay. One block of duration T has four slots:
//   tau1, tau2  users 1 and 2 offload their full tasks to the relay;
//   tau3        the relay broadcasts the network-coded shares to be computed
//               by the opposite user (relay may already compute here);
//   tau4        users and relay finish computing.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twrmec {

// Static scenario constants. Defaults are the reference simulation values.
struct SystemParams {
  double bandwidth_hz = 1e6;
  double noise_power_w = 1e-9;
  double task_bits_1 = 1.8e5;
  double task_bits_2 = 1.8e5;
  double cycles_per_bit = 1e3;
  double eff_cap_user = 1e-28;   // J / (cycle Hz^2)
  double eff_cap_relay = 1e-28;  // J / (cycle Hz^2)
  double cpu_user_hz = 0.3e9;
  double cpu_relay_hz = 0.6e9;
  double deadline_s = 1.0;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// Channel power gains normalised by the noise power, |h|^2 / sigma^2 (1/W).
struct ChannelRealization {
  double gamma_1f = 1e3;
  double gamma_2f = 1e3;
  double gamma_1b = 1e3;
  double gamma_2b = 1e3;

  void Validate() const;
  // The broadcast slot is limited by the weaker backward link.
  double BackwardGamma() const;
};

// Full decision vector. Durations are the ground truth; powers are derivable
// from them and stored for reporting.
struct Schedule {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
  double tau4 = 0.0;
  double power_user1 = 0.0;
  double power_user2 = 0.0;
  double power_relay = 0.0;

  double TotalDuration() const { return tau1 + tau2 + tau3 + tau4; }
};

struct EnergyBreakdown {
  double e1_offload = 0.0;
  double e2_offload = 0.0;
  double e3_broadcast = 0.0;
  double cu_local = 0.0;  // per user
  double cr_relay = 0.0;
  double total = 0.0;
};

// Stored and recomputed powers of a schedule disagree.
class ScheduleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shannon rate B log2(1 + P gamma) in bits/s.
double OffloadRate(double power_w, double gamma, double bandwidth_hz);

// Transmit power that delivers `bits` in `tau_s` seconds:
// (2^(bits / (B tau)) - 1) / gamma. Throws std::domain_error for tau_s <= 0.
double PowerForDuration(double tau_s, double bits, double gamma,
                        double bandwidth_hz);

// tau * PowerForDuration(...); convex and decreasing in tau.
double OffloadEnergy(double tau_s, double bits, double gamma,
                     double bandwidth_hz);

// dE/dtau of OffloadEnergy:
// -(2^(L/(B tau)) (L ln2 / (B tau) - 1) + 1) / gamma. Always negative.
double OffloadEnergySlope(double tau_s, double bits, double gamma,
                          double bandwidth_hz);

// alpha2 implied by the coding coupling (1 - alpha1) L1 = (1 - alpha2) L2.
double CoupledAlpha2(const SystemParams& params, double alpha1);

struct BroadcastQuantities {
  double tau3 = 0.0;
  double energy = 0.0;
  double rate = 0.0;  // min over both backward links
  // False when the relay would need infinite time (zero rate, bits to send).
  bool feasible = true;
};

BroadcastQuantities ComputeBroadcast(const SystemParams& params,
                                     const ChannelRealization& chan,
                                     double power_relay, double alpha1);

struct ComputeLoad {
  double user_time = 0.0;    // t_u
  double relay_time = 0.0;   // t_r, the part after the broadcast slot
  double user_energy = 0.0;  // C_u, per user
  double relay_energy = 0.0; // C_r
};

// t_r is clamped at zero when the relay finishes within the broadcast slot.
ComputeLoad ComputeTimesAndEnergies(const SystemParams& params, double alpha1,
                                    double alpha2, double tau3);

// Recomputes every energy term from the durations. Throws
// ScheduleInconsistency if a stored power deviates from its recomputed value
// by more than 1e-9 relative.
EnergyBreakdown EvaluateSchedule(const SystemParams& params,
                                 const ChannelRealization& chan,
                                 const Schedule& schedule);

enum class Constraint {
  kCoupling,
  kAlphaBounds,
  kNonnegativity,
  kBroadcastRate,
  kComputeTime,
  kDeadline,
};

std::string_view ConstraintName(Constraint c);

struct FeasibilityVerdict {
  std::vector<Constraint> violations;
  bool feasible() const { return violations.empty(); }
};

FeasibilityVerdict CheckFeasible(const SystemParams& params,
                                 const ChannelRealization& chan,
                                 const Schedule& schedule, double tol_abs);

}  // namespace twrmec

#endif  // TWRMEC_SYSTEM_MODEL_H_
