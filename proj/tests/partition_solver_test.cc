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
#include <random>

#include <gtest/gtest.h>

namespace twrmec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SystemParams WithDeadline(double t) {
  SystemParams p;
  p.deadline_s = t;
  return p;
}

// Budget straight from the slot layout, without case analysis.
double LayoutBudget(const SystemParams& p, const ChannelRealization& c,
                    double power_relay, double alpha1) {
  const double alpha2 = CoupledAlpha2(p, alpha1);
  const double tau3 = ComputeBroadcast(p, c, power_relay, alpha1).tau3;
  const ComputeLoad load = ComputeTimesAndEnergies(p, alpha1, alpha2, tau3);
  return p.deadline_s - tau3 - std::max(load.user_time, load.relay_time);
}

// E1 + E2 after the optimal split, as a function of alpha1.
double Xi(const SystemParams& p, const ChannelRealization& c, double power_relay,
          double alpha1) {
  const InnerSolution s = SplitBudget(LayoutBudget(p, c, power_relay, alpha1), c, p);
  return OffloadEnergy(s.tau1, p.task_bits_1, c.gamma_1f, p.bandwidth_hz) +
         OffloadEnergy(s.tau2, p.task_bits_2, c.gamma_2f, p.bandwidth_hz);
}

// Total energy at alpha1 with the best split, from the system model only.
double LayoutEnergy(const SystemParams& p, const ChannelRealization& c,
                    double power_relay, double alpha1, int split_points) {
  const double alpha2 = CoupledAlpha2(p, alpha1);
  const BroadcastQuantities bc = ComputeBroadcast(p, c, power_relay, alpha1);
  const ComputeLoad load = ComputeTimesAndEnergies(p, alpha1, alpha2, bc.tau3);
  const double budget = LayoutBudget(p, c, power_relay, alpha1);
  if (!(budget > 0.0)) return kInf;
  double best = kInf;
  for (int j = 1; j < split_points; ++j) {
    const double t1 = budget * j / split_points;
    best = std::min(best, OffloadEnergy(t1, p.task_bits_1, c.gamma_1f, p.bandwidth_hz) +
                              OffloadEnergy(budget - t1, p.task_bits_2, c.gamma_2f,
                                            p.bandwidth_hz));
  }
  return best + bc.energy + 2.0 * load.user_energy + load.relay_energy;
}

TEST(CaseCoefficientsTest, FrozenValues) {
  const CaseCoefficients cc =
      ComputeCaseCoefficients(SystemParams{}, ChannelRealization{}, 0.1);
  EXPECT_NEAR(cc.broadcast_rate, 6658211.4827517947, 1e-6);
  EXPECT_NEAR(cc.phi, 0.48898389096901468, 1e-14);
  EXPECT_NEAR(cc.varphi, 1.9490475838815602e-8, 1e-20);
  EXPECT_NEAR(cc.omega, 3.4835238165570213e-6, 1e-18);
  EXPECT_DOUBLE_EQ(cc.omega_tilde, -0.6);
  EXPECT_DOUBLE_EQ(ComputeVarphi(SystemParams{}, 0.1, cc.broadcast_rate), cc.varphi);

  const CaseCoefficients hi =
      ComputeCaseCoefficients(SystemParams{}, ChannelRealization{}, 1.0);
  EXPECT_NEAR(hi.phi, 0.49258690098637481, 1e-14);
  EXPECT_NEAR(hi.varphi, -2.3164407530806037e-8, 1e-20);
}

TEST(CaseCoefficientsTest, ZeroRelayPowerLimit) {
  const CaseCoefficients cc =
      ComputeCaseCoefficients(SystemParams{}, ChannelRealization{}, 0.0);
  EXPECT_EQ(cc.phi, 0.0);
  EXPECT_EQ(cc.omega, kInf);
  EXPECT_NEAR(cc.varphi, 2.665342640972003e-8, 1e-20);
  // Continuous from the right.
  const CaseCoefficients tiny =
      ComputeCaseCoefficients(SystemParams{}, ChannelRealization{}, 1e-12);
  EXPECT_NEAR(tiny.varphi, cc.varphi, 1e-15);
}

TEST(CaseCoefficientsTest, VarphiFallsWithRelayPower) {
  double prev = kInf;
  for (double pr = 1e-4; pr < 10.0; pr *= 1.5) {
    const double v = ComputeCaseCoefficients(SystemParams{}, ChannelRealization{}, pr).varphi;
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(AlphaLowerBoundTest, TaskSizes) {
  SystemParams p;
  EXPECT_EQ(AlphaLowerBound(p), 0.0);
  p.task_bits_1 = 3.6e5;
  EXPECT_DOUBLE_EQ(AlphaLowerBound(p), 0.5);
  EXPECT_DOUBLE_EQ(CoupledAlpha2(p, 0.5), 0.0);
}

TEST(OffloadBudgetTest, MatchesSlotLayout) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    ChannelRealization c;
    c.gamma_1b = 2e3 * u(rng) + 10.0;
    c.gamma_2b = 2e3 * u(rng) + 10.0;
    SystemParams p = WithDeadline(0.5 + u(rng));
    p.task_bits_2 = 1.8e5 * (0.5 + u(rng));
    const double pr = std::pow(10.0, -4.0 + 5.0 * u(rng));
    const double lo = AlphaLowerBound(p);
    const double alpha1 = lo + (1.0 - lo) * u(rng);
    const CaseCoefficients cc = ComputeCaseCoefficients(p, c, pr);
    EXPECT_NEAR(OffloadBudget(p, cc, alpha1), LayoutBudget(p, c, pr, alpha1), 1e-12);
  }
}

TEST(OffloadBudgetTest, CasesMeetAtBoundary) {
  const SystemParams p;
  for (double pr : {1e-3, 0.1, 1.0, 5.0}) {
    const CaseCoefficients cc = ComputeCaseCoefficients(p, ChannelRealization{}, pr);
    const double a = 1.0 - cc.phi;
    const double case_a = p.deadline_s - cc.omega * (1.0 - a) * p.task_bits_1;
    const double case_b = p.deadline_s - p.cycles_per_bit *
                                             (2.0 * a * p.task_bits_1 - p.task_bits_1 +
                                              p.task_bits_2) / p.cpu_relay_hz;
    EXPECT_NEAR(case_a, case_b, 1e-12);
    EXPECT_NEAR(OffloadBudget(p, cc, a), case_a, 1e-12);
  }
}

TEST(InteriorTest, CaseAMultiplierIsPinned) {
  // At a stationary point theta = 2 varphi L1 / (d tau_hat / d alpha1).
  const auto ip = CaseAInterior(WithDeadline(0.7), ChannelRealization{}, 0.1);
  ASSERT_TRUE(ip.has_value());
  EXPECT_NEAR(ip->theta, 0.011190091909909332, 1e-9 * 0.0112);
  EXPECT_GT(ip->alpha1, 0.0);
  EXPECT_EQ(ip->alpha1, ip->alpha1_unclipped);
  // The multiplier does not depend on the deadline; alpha1 does.
  const auto loose = CaseAInterior(WithDeadline(0.75), ChannelRealization{}, 0.1);
  ASSERT_TRUE(loose.has_value());
  EXPECT_NEAR(loose->theta, ip->theta, 1e-9 * ip->theta);
  EXPECT_LT(loose->alpha1, ip->alpha1);
}

TEST(InteriorTest, CaseBMultiplierIsPinned) {
  const auto ip = CaseBInterior(WithDeadline(1.0), ChannelRealization{}, 1.0);
  ASSERT_TRUE(ip.has_value());
  EXPECT_NEAR(ip->theta, 0.013898644518483622, 1e-9 * 0.0139);
  EXPECT_FALSE(CaseAInterior(WithDeadline(1.0), ChannelRealization{}, 1.0).has_value());
  EXPECT_FALSE(CaseBInterior(WithDeadline(1.0), ChannelRealization{}, 0.1).has_value());
  EXPECT_FALSE(CaseAInterior(WithDeadline(1.0), ChannelRealization{}, 0.0).has_value());
}

TEST(InteriorTest, ClippedIntoCaseRange) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int seen_a = 0;
  int seen_b = 0;
  for (int i = 0; i < 300; ++i) {
    ChannelRealization c;
    c.gamma_1f = 3e3 * u(rng) + 20.0;
    c.gamma_2f = 3e3 * u(rng) + 20.0;
    c.gamma_1b = 3e3 * u(rng) + 20.0;
    c.gamma_2b = 3e3 * u(rng) + 20.0;
    const SystemParams p = WithDeadline(0.6 + 0.9 * u(rng));
    const double pr = std::pow(10.0, -3.0 + 4.0 * u(rng));
    const CaseCoefficients cc = ComputeCaseCoefficients(p, c, pr);
    if (const auto a = CaseAInterior(p, c, pr)) {
      ++seen_a;
      EXPECT_EQ(a->alpha1, std::clamp(a->alpha1_unclipped, 0.0, 1.0 - cc.phi));
    }
    if (const auto b = CaseBInterior(p, c, pr)) {
      ++seen_b;
      EXPECT_EQ(b->alpha1, std::clamp(b->alpha1_unclipped, 1.0 - cc.phi, 1.0));
    }
  }
  EXPECT_GT(seen_a, 20);
  EXPECT_GT(seen_b, 20);
}

TEST(InteriorTest, UnclippedPointIsLocalMinimum) {
  const SystemParams p = WithDeadline(0.7);
  const ChannelRealization c;
  const auto ip = CaseAInterior(p, c, 0.1);
  ASSERT_TRUE(ip.has_value());
  auto energy = [&](double a) {
    return BuildCandidate(p, c, 0.1, CandidateLabel::kCaseAInterior, a).energy.total;
  };
  const double e0 = energy(ip->alpha1);
  for (double h : {1e-3, 1e-2, 5e-2}) {
    EXPECT_LE(e0, energy(ip->alpha1 + h));
    EXPECT_LE(e0, energy(ip->alpha1 - h));
  }
}

TEST(XiGradientTest, MatchesCentralDifference) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    ChannelRealization c;
    c.gamma_1f = 3e3 * u(rng) + 50.0;
    c.gamma_2f = 3e3 * u(rng) + 50.0;
    c.gamma_1b = 3e3 * u(rng) + 50.0;
    c.gamma_2b = 3e3 * u(rng) + 50.0;
    const SystemParams p = WithDeadline(0.8 + u(rng));
    const double pr = std::pow(10.0, -2.0 + 3.0 * u(rng));
    const CaseCoefficients cc = ComputeCaseCoefficients(p, c, pr);
    const bool case_a = i % 2 == 0;
    const double lo = case_a ? 0.0 : 1.0 - cc.phi;
    const double hi = case_a ? 1.0 - cc.phi : 1.0;
    const double alpha1 = lo + (hi - lo) * (0.05 + 0.9 * u(rng));
    const double h = 1e-6;
    if (!(LayoutBudget(p, c, pr, alpha1 + h) > 0.0) ||
        !(LayoutBudget(p, c, pr, alpha1 - h) > 0.0)) {
      continue;
    }
    const double fd = (Xi(p, c, pr, alpha1 + h) - Xi(p, c, pr, alpha1 - h)) / (2.0 * h);
    const InnerSolution inner = SplitBudget(LayoutBudget(p, c, pr, alpha1), c, p);
    const double g = case_a ? XiGradientCaseA(p, c, inner, pr)
                            : XiGradientCaseB(p, c, inner, pr);
    EXPECT_NEAR(g, fd, 1e-4 * std::abs(fd)) << "alpha1 = " << alpha1;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(CandidateTest, FillsDeadlineAndCoupling) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    ChannelRealization c;
    c.gamma_1f = 3e3 * u(rng) + 20.0;
    c.gamma_2b = 3e3 * u(rng) + 20.0;
    SystemParams p = WithDeadline(0.6 + u(rng));
    p.task_bits_1 = 1.8e5 * (0.5 + u(rng));
    const double pr = std::pow(10.0, -3.0 + 4.0 * u(rng));
    for (const CandidateResult& r : EvaluateCandidates(p, c, pr)) {
      if (!r.feasible) {
        EXPECT_EQ(r.energy.total, kInf);
        continue;
      }
      const Schedule& s = r.schedule;
      EXPECT_NEAR(s.TotalDuration(), p.deadline_s, 1e-9 * p.deadline_s);
      EXPECT_LE(std::abs((1.0 - s.alpha1) * p.task_bits_1 - (1.0 - s.alpha2) * p.task_bits_2),
                1e-12 * p.task_bits_1);
      EXPECT_GE(s.alpha1, AlphaLowerBound(p));
      // Which side finishes last follows the regime boundary.
      const CaseCoefficients cc = ComputeCaseCoefficients(p, c, pr);
      const ComputeLoad load = ComputeTimesAndEnergies(p, s.alpha1, s.alpha2, s.tau3);
      const double scale = 1e-9 * p.deadline_s;
      if (s.alpha1 < 1.0 - cc.phi) {
        EXPECT_GE(load.user_time, load.relay_time - scale);
      } else if (s.alpha1 > 1.0 - cc.phi) {
        EXPECT_GE(load.relay_time, load.user_time - scale);
      }
    }
  }
}

TEST(CandidateTest, ZeroRelayPower) {
  const auto all = EvaluateCandidates(SystemParams{}, ChannelRealization{}, 0.0);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_FALSE(all[0].feasible);
  EXPECT_TRUE(all[1].feasible);
  EXPECT_EQ(all[1].schedule.power_relay, 0.0);
  EXPECT_THROW(EvaluateCandidates(SystemParams{}, ChannelRealization{}, -1.0),
               std::domain_error);
}

TEST(CandidateTest, InfeasibleDeadline) {
  const SystemParams p = WithDeadline(0.3);
  EXPECT_THROW(SolveGivenRelayPower(p, ChannelRealization{}, 1.0), InfeasibleError);
  const CandidateResult r =
      BuildCandidate(p, ChannelRealization{}, 1.0, CandidateLabel::kAlphaZero, 0.0);
  EXPECT_FALSE(r.feasible);
}

TEST(CandidateTest, Names) {
  EXPECT_EQ(CandidateName(CandidateLabel::kAlphaZero), "alpha_zero");
  EXPECT_EQ(CandidateName(CandidateLabel::kCaseBInterior), "case_b_interior");
}

TEST(SolveGivenRelayPowerTest, NoWorseThanGridOracle) {
  std::mt19937_64 rng(15);
  std::exponential_distribution<double> gain(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    ChannelRealization c;
    c.gamma_1f = 1e3 * gain(rng) + 5.0;
    c.gamma_2f = 1e3 * gain(rng) + 5.0;
    c.gamma_1b = 1e3 * gain(rng) + 5.0;
    c.gamma_2b = 1e3 * gain(rng) + 5.0;
    const SystemParams p = WithDeadline(0.7 + 0.8 * u(rng));
    const double pr = std::pow(10.0, -3.0 + 3.0 * u(rng));
    double oracle = kInf;
    for (int j = 0; j <= 400; ++j) {
      oracle = std::min(oracle, LayoutEnergy(p, c, pr, j / 400.0, 400));
    }
    if (std::isinf(oracle)) continue;
    const CandidateResult best = SolveGivenRelayPower(p, c, pr);
    EXPECT_LE(best.energy.total, oracle * (1.0 + 1e-9)) << "instance " << i;
    // And the grid gets close.
    EXPECT_LE(oracle, best.energy.total * 1.01) << "instance " << i;
  }
}

}  // namespace
}  // namespace twrmec
