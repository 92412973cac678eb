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

#ifndef TWRMEC_PARTITION_SOLVER_H_
#define TWRMEC_PARTITION_SOLVER_H_

// Optimal task partition for a fixed relay transmit power P_r.
//
// With alpha2 tied to alpha1 by the coding coupling, the block splits into two
// regimes at alpha1 = 1 - phi:
//   case A (alpha1 <= 1 - phi): users finish last, t_u >= t_r, and the
//     offload budget is tau1 + tau2 = T - omega (1 - alpha1) L1;
//   case B (alpha1 >= 1 - phi): the relay finishes last, t_r >= t_u, and
//     tau1 + tau2 = T - k (2 alpha1 L1 - L1 + L2) / F_r.
// In both, E = Psi + xi(alpha1) + varphi (alpha1 L1 + alpha2 L2) where
// xi = E1 + E2 after the optimal split. The sign of varphi decides whether
// an interior stationary point exists in case A (varphi > 0) or case B
// (varphi < 0); it is located by bisection over the budget multiplier theta.

#include <optional>
#include <string_view>
#include <vector>

#include "twrmec/inner_allocator.h"
#include "twrmec/system_model.h"

namespace twrmec {

struct CaseCoefficients {
  double broadcast_rate = 0.0;  // r_b, bits/s
  double phi = 0.0;             // regime boundary sits at alpha1 = 1 - phi
  double varphi = 0.0;          // J/bit, net energy per bit moved to the relay
  double omega = 0.0;           // s/bit, 1/r_b + k/F_u
  double omega_tilde = 0.0;     // s (per unit alpha1), -2 k L1 / F_r
  double psi_const = 0.0;       // J
};

double ComputePhi(const SystemParams& params, double broadcast_rate);
double ComputeVarphi(const SystemParams& params, double power_relay,
                     double broadcast_rate);

// P_r = 0 is allowed: phi = 0 and omega = inf, varphi takes its P_r -> 0
// limit.
CaseCoefficients ComputeCaseCoefficients(const SystemParams& params,
                                         const ChannelRealization& chan,
                                         double power_relay);

// Smallest alpha1 keeping alpha2 = 1 - (1 - alpha1) L1 / L2 inside [0, 1].
double AlphaLowerBound(const SystemParams& params);

// tau1 + tau2 left once broadcast and computing slots are placed, using the
// case A identity for alpha1 <= 1 - phi and the case B identity otherwise.
double OffloadBudget(const SystemParams& params, const CaseCoefficients& cc,
                     double alpha1);

enum class CandidateLabel {
  kAlphaZero,  // alpha1 at its lower bound (0 when L1 <= L2)
  kAlphaOne,
  kAlphaPhiBoundary,
  kCaseAInterior,
  kCaseBInterior,
};

std::string_view CandidateName(CandidateLabel label);

struct CandidateResult {
  CandidateLabel label = CandidateLabel::kAlphaZero;
  double alpha1 = 0.0;
  Schedule schedule;
  EnergyBreakdown energy;
  bool feasible = false;
};

// Full schedule for a given alpha1: budget identity, optimal split, then
// tau4 = T - tau1 - tau2 - tau3. Infeasible (feasible = false, energy
// total = inf) when the budget is not positive.
CandidateResult BuildCandidate(const SystemParams& params,
                               const ChannelRealization& chan,
                               double power_relay, CandidateLabel label,
                               double alpha1);

struct InteriorPoint {
  double theta = 0.0;             // root of the fixed-point residual
  double alpha1_unclipped = 0.0;
  double alpha1 = 0.0;            // clipped into the case's alpha1 range
};

// Stationary point of E in case A; nullopt when varphi <= 0, case A is
// empty, the budget is infeasible or no bracket is found.
std::optional<InteriorPoint> CaseAInterior(const SystemParams& params,
                                           const ChannelRealization& chan,
                                           double power_relay);

// Same for case B; requires varphi < 0.
std::optional<InteriorPoint> CaseBInterior(const SystemParams& params,
                                           const ChannelRealization& chan,
                                           double power_relay);

// Closed-form d(E1 + E2)/d alpha1 at an optimal split, via chain rule
// through the budget identity of each case.
double XiGradientCaseA(const SystemParams& params, const ChannelRealization& chan,
                       const InnerSolution& inner, double power_relay);
double XiGradientCaseB(const SystemParams& params, const ChannelRealization& chan,
                       const InnerSolution& inner, double power_relay);

// All candidates that apply for this P_r, in label order. Infeasible ones are
// included with feasible = false.
std::vector<CandidateResult> EvaluateCandidates(const SystemParams& params,
                                                const ChannelRealization& chan,
                                                double power_relay);

// Minimum-energy feasible candidate. Throws InfeasibleError if none.
CandidateResult SolveGivenRelayPower(const SystemParams& params,
                                     const ChannelRealization& chan,
                                     double power_relay);

}  // namespace twrmec

#endif  // TWRMEC_PARTITION_SOLVER_H_
