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

#include "twrmec/partition_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twrmec/lambert_w.h"

namespace twrmec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxExpansions = 200;
constexpr int kMaxBisections = 200;
constexpr double kResidualTolerance = 1e-11;

double UserEnergyPerBit(const SystemParams& p) {
  return p.cycles_per_bit * p.eff_cap_user * p.cpu_user_hz * p.cpu_user_hz;
}

double RelayEnergyPerBit(const SystemParams& p) {
  return p.cycles_per_bit * p.eff_cap_relay * p.cpu_relay_hz * p.cpu_relay_hz;
}

// Broadcast energy per bit of combined traffic, P_r / (2 r_b).
double BroadcastEnergyPerBit(const ChannelRealization& chan, double power_relay,
                             double rate, double bandwidth_hz) {
  if (rate > 0.0) return power_relay / (2.0 * rate);
  return std::numbers::ln2 / (2.0 * bandwidth_hz * chan.BackwardGamma());
}

struct FixedPoint {
  double theta;
  double tau1;
  double tau2;  // from the left-hand Lambert term
};

// Solves W(gamma2 lambda / (e chi2)) = W((theta gamma2 - 1) / e) for theta,
// where chi_i = slope * vartheta_i / (vartheta_1 + vartheta_2) is dtau_i /
// d alpha1 and `slope` is d(tau1 + tau2) / d alpha1 of the active case.
std::optional<FixedPoint> SolveStationarity(const SystemParams& params,
                                            const ChannelRealization& chan,
                                            double budget_slope, double varphi,
                                            double theta_start) {
  const double b = params.bandwidth_hz;
  const double l1 = params.task_bits_1;
  const double l2 = params.task_bits_2;
  const double g1 = chan.gamma_1f;
  const double g2 = chan.gamma_2f;

  struct Eval {
    bool in_domain;
    double residual;  // lhs - rhs, decreasing in theta
    double lhs_w;
  };
  auto evaluate = [&](double theta) -> Eval {
    const ThetaResponse r1 = RespondToTheta(theta, g1, l1, b);
    const ThetaResponse r2 = RespondToTheta(theta, g2, l2, b);
    const double tau1 = r1.tau;
    const double v1 = r1.sensitivity;
    const double v2 = r2.sensitivity;
    const double chi1 = budget_slope * v1 / (v1 + v2);
    const double chi2 = budget_slope * v2 / (v1 + v2);
    const double lambda = 2.0 * varphi * l1 +
                          chi1 * OffloadEnergySlope(tau1, l1, g1, b) - chi2 / g2;
    const double arg = g2 * lambda / (std::numbers::e * chi2);
    if (!(arg >= -1.0 / std::numbers::e - kLambertDomainSlack)) {
      return {false, -kInf, 0.0};
    }
    const double lhs = LambertW0(arg);
    const double rhs = r2.lambert_w;
    return {true, lhs - rhs, lhs};
  };

  double lo = theta_start;
  double hi = theta_start;
  Eval e_lo = evaluate(lo);
  Eval e_hi = e_lo;
  int expansions = 0;
  while (e_hi.residual > 0.0 && expansions++ < kMaxExpansions) {
    hi *= 2.0;
    e_hi = evaluate(hi);
  }
  while (e_lo.residual < 0.0 && expansions++ < kMaxExpansions) {
    lo *= 0.5;
    e_lo = evaluate(lo);
  }
  if (e_lo.residual < 0.0 || e_hi.residual > 0.0) return std::nullopt;

  double theta = e_lo.residual == 0.0 ? lo : hi;
  Eval at = e_lo.residual == 0.0 ? e_lo : e_hi;
  if (e_lo.residual != 0.0 && e_hi.residual != 0.0) {
    for (int i = 0; i < kMaxBisections; ++i) {
      const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const Eval e = evaluate(mid);
      theta = mid;
      at = e;
      if (e.in_domain && std::abs(e.residual) <= kResidualTolerance) break;
      if (e.residual > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  if (!at.in_domain) return std::nullopt;
  return FixedPoint{theta, TauOfTheta(theta, g1, l1, b),
                    l2 * std::numbers::ln2 / (b * (at.lhs_w + 1.0))};
}

double XiGradient(const SystemParams& params, const ChannelRealization& chan,
                  const InnerSolution& inner, double budget_slope) {
  const double b = params.bandwidth_hz;
  const double total = inner.sensitivity1 + inner.sensitivity2;
  const double chi1 = budget_slope * inner.sensitivity1 / total;
  const double chi2 = budget_slope * inner.sensitivity2 / total;
  return chi1 * OffloadEnergySlope(inner.tau1, params.task_bits_1, chan.gamma_1f, b) +
         chi2 * OffloadEnergySlope(inner.tau2, params.task_bits_2, chan.gamma_2f, b);
}

}  // namespace

double ComputePhi(const SystemParams& p, double broadcast_rate) {
  const double k = p.cycles_per_bit;
  const double inv_rate = broadcast_rate > 0.0 ? 1.0 / broadcast_rate : kInf;
  return (k * (p.task_bits_1 + p.task_bits_2) / p.cpu_relay_hz) /
         (p.task_bits_1 * (k / p.cpu_user_hz + inv_rate + 2.0 * k / p.cpu_relay_hz));
}

double ComputeVarphi(const SystemParams& p, double power_relay,
                     double broadcast_rate) {
  return RelayEnergyPerBit(p) - UserEnergyPerBit(p) -
         power_relay / (2.0 * broadcast_rate);
}

CaseCoefficients ComputeCaseCoefficients(const SystemParams& p,
                                         const ChannelRealization& chan,
                                         double power_relay) {
  CaseCoefficients cc;
  cc.broadcast_rate =
      std::min(OffloadRate(power_relay, chan.gamma_1b, p.bandwidth_hz),
               OffloadRate(power_relay, chan.gamma_2b, p.bandwidth_hz));
  const double per_bit =
      BroadcastEnergyPerBit(chan, power_relay, cc.broadcast_rate, p.bandwidth_hz);
  cc.phi = ComputePhi(p, cc.broadcast_rate);
  cc.varphi = RelayEnergyPerBit(p) - UserEnergyPerBit(p) - per_bit;
  cc.omega = (cc.broadcast_rate > 0.0 ? 1.0 / cc.broadcast_rate : kInf) +
             p.cycles_per_bit / p.cpu_user_hz;
  cc.omega_tilde = -2.0 * p.cycles_per_bit * p.task_bits_1 / p.cpu_relay_hz;
  cc.psi_const = (p.task_bits_1 + p.task_bits_2) * (UserEnergyPerBit(p) + per_bit);
  return cc;
}

double AlphaLowerBound(const SystemParams& p) {
  return std::max(0.0, 1.0 - p.task_bits_2 / p.task_bits_1);
}

double OffloadBudget(const SystemParams& p, const CaseCoefficients& cc,
                     double alpha1) {
  const double t = p.deadline_s;
  // alpha1 = 1 always has the relay finishing last (t_u = 0).
  if (alpha1 < 1.0 && alpha1 <= 1.0 - cc.phi) {
    return t - cc.omega * (1.0 - alpha1) * p.task_bits_1;
  }
  return t - p.cycles_per_bit *
                 (2.0 * alpha1 * p.task_bits_1 - p.task_bits_1 + p.task_bits_2) /
                 p.cpu_relay_hz;
}

std::string_view CandidateName(CandidateLabel label) {
  switch (label) {
    case CandidateLabel::kAlphaZero:
      return "alpha_zero";
    case CandidateLabel::kAlphaOne:
      return "alpha_one";
    case CandidateLabel::kAlphaPhiBoundary:
      return "alpha_phi_boundary";
    case CandidateLabel::kCaseAInterior:
      return "case_a_interior";
    case CandidateLabel::kCaseBInterior:
      return "case_b_interior";
  }
  return "unknown";
}

CandidateResult BuildCandidate(const SystemParams& params,
                               const ChannelRealization& chan,
                               double power_relay, CandidateLabel label,
                               double alpha1) {
  CandidateResult r;
  r.label = label;
  r.alpha1 = alpha1;
  r.energy.total = kInf;

  const BroadcastQuantities bc = ComputeBroadcast(params, chan, power_relay, alpha1);
  if (!bc.feasible) return r;
  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  const double tau_hat = OffloadBudget(params, cc, alpha1);
  if (!(tau_hat > 0.0)) return r;

  InnerSolution inner;
  try {
    inner = SplitBudget(tau_hat, chan, params);
  } catch (const InfeasibleError&) {
    return r;
  }
  const double b = params.bandwidth_hz;
  Schedule& s = r.schedule;
  s.alpha1 = alpha1;
  s.alpha2 = CoupledAlpha2(params, alpha1);
  s.tau1 = inner.tau1;
  s.tau2 = inner.tau2;
  s.tau3 = bc.tau3;
  s.tau4 = params.deadline_s - s.tau1 - s.tau2 - s.tau3;
  s.power_user1 = PowerForDuration(s.tau1, params.task_bits_1, chan.gamma_1f, b);
  s.power_user2 = PowerForDuration(s.tau2, params.task_bits_2, chan.gamma_2f, b);
  // Nothing to broadcast means the relay stays silent.
  s.power_relay = bc.tau3 > 0.0 ? power_relay : 0.0;

  r.energy = EvaluateSchedule(params, chan, s);
  r.feasible = s.tau4 >= 0.0 &&
               CheckFeasible(params, chan, s, 1e-9 * params.deadline_s).feasible();
  if (!r.feasible) r.energy.total = kInf;
  return r;
}

std::optional<InteriorPoint> CaseAInterior(const SystemParams& params,
                                           const ChannelRealization& chan,
                                           double power_relay) {
  if (!(power_relay > 0.0)) return std::nullopt;
  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  const double alpha_min = AlphaLowerBound(params);
  const double alpha_max = 1.0 - cc.phi;
  if (!(cc.varphi > 0.0) || !(alpha_max > alpha_min)) return std::nullopt;

  // The boundary is the least-delay partition; start the bracket from its
  // budget multiplier.
  const double boundary_budget = OffloadBudget(params, cc, alpha_max);
  if (!(boundary_budget > 0.0)) return std::nullopt;
  const double theta0 = SplitBudget(boundary_budget, chan, params).theta;

  const double l1 = params.task_bits_1;
  const auto fp = SolveStationarity(params, chan, cc.omega * l1, cc.varphi, theta0);
  if (!fp) return std::nullopt;

  InteriorPoint ip;
  ip.theta = fp->theta;
  ip.alpha1_unclipped =
      1.0 - (params.deadline_s - fp->tau1 - fp->tau2) / (cc.omega * l1);
  ip.alpha1 = std::min(std::max(ip.alpha1_unclipped, alpha_min), alpha_max);
  return ip;
}

std::optional<InteriorPoint> CaseBInterior(const SystemParams& params,
                                           const ChannelRealization& chan,
                                           double power_relay) {
  if (!(power_relay > 0.0)) return std::nullopt;
  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  const double alpha_lo = std::max(1.0 - cc.phi, AlphaLowerBound(params));
  if (!(cc.varphi < 0.0) || !(alpha_lo < 1.0)) return std::nullopt;

  const double boundary_budget = OffloadBudget(params, cc, alpha_lo);
  if (!(boundary_budget > 0.0)) return std::nullopt;
  const double theta0 = SplitBudget(boundary_budget, chan, params).theta;

  const auto fp =
      SolveStationarity(params, chan, cc.omega_tilde, cc.varphi, theta0);
  if (!fp) return std::nullopt;

  const double k = params.cycles_per_bit;
  const double fr = params.cpu_relay_hz;
  InteriorPoint ip;
  ip.theta = fp->theta;
  ip.alpha1_unclipped =
      (params.deadline_s - fp->tau1 - fp->tau2 +
       k * (params.task_bits_1 - params.task_bits_2) / fr) /
      (2.0 * k * params.task_bits_1 / fr);
  ip.alpha1 = std::max(std::min(ip.alpha1_unclipped, 1.0), alpha_lo);
  return ip;
}

double XiGradientCaseA(const SystemParams& params, const ChannelRealization& chan,
                       const InnerSolution& inner, double power_relay) {
  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  return XiGradient(params, chan, inner, cc.omega * params.task_bits_1);
}

double XiGradientCaseB(const SystemParams& params, const ChannelRealization& chan,
                       const InnerSolution& inner, double power_relay) {
  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  return XiGradient(params, chan, inner, cc.omega_tilde);
}

std::vector<CandidateResult> EvaluateCandidates(const SystemParams& params,
                                                const ChannelRealization& chan,
                                                double power_relay) {
  if (power_relay < 0.0) {
    throw std::domain_error("relay power must be nonnegative");
  }
  const double alpha_min = AlphaLowerBound(params);
  std::vector<CandidateResult> out;
  out.push_back(BuildCandidate(params, chan, power_relay,
                               CandidateLabel::kAlphaZero, alpha_min));
  out.push_back(
      BuildCandidate(params, chan, power_relay, CandidateLabel::kAlphaOne, 1.0));
  if (!(power_relay > 0.0)) return out;

  const CaseCoefficients cc = ComputeCaseCoefficients(params, chan, power_relay);
  const double boundary = std::clamp(1.0 - cc.phi, alpha_min, 1.0);
  out.push_back(BuildCandidate(params, chan, power_relay,
                               CandidateLabel::kAlphaPhiBoundary, boundary));
  // varphi == 0 leaves E flat in alpha1 apart from xi; the boundary covers it.
  if (cc.varphi > 0.0) {
    if (auto ip = CaseAInterior(params, chan, power_relay)) {
      out.push_back(BuildCandidate(params, chan, power_relay,
                                   CandidateLabel::kCaseAInterior, ip->alpha1));
    }
  } else if (cc.varphi < 0.0) {
    if (auto ip = CaseBInterior(params, chan, power_relay)) {
      out.push_back(BuildCandidate(params, chan, power_relay,
                                   CandidateLabel::kCaseBInterior, ip->alpha1));
    }
  }
  return out;
}

CandidateResult SolveGivenRelayPower(const SystemParams& params,
                                     const ChannelRealization& chan,
                                     double power_relay) {
  std::vector<CandidateResult> candidates =
      EvaluateCandidates(params, chan, power_relay);
  const CandidateResult* best = nullptr;
  for (const CandidateResult& c : candidates) {
    if (c.feasible && (best == nullptr || c.energy.total < best->energy.total)) {
      best = &c;
    }
  }
  if (best == nullptr) {
    throw InfeasibleError("no feasible partition for this relay power and deadline");
  }
  return *best;
}

}  // namespace twrmec
