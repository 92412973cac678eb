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

#include "twrmec/inner_allocator.h"

#include <cmath>
#include <numbers>

#include "twrmec/lambert_w.h"

namespace twrmec {
namespace {

constexpr double kInitialThetaLo = 1e-12;
constexpr double kInitialThetaHi = 1e-2;
constexpr int kMaxExpansions = 200;
constexpr int kMaxBisections = 200;
constexpr double kBudgetTolerance = 1e-12;

double LambertArgument(double theta, double gamma) {
  if (!(theta > 0.0)) {
    throw std::domain_error("budget multiplier must be positive");
  }
  return (theta * gamma - 1.0) / std::numbers::e;
}

}  // namespace

double TauOfTheta(double theta, double gamma, double bits, double bandwidth_hz) {
  const double w = LambertW0(LambertArgument(theta, gamma));
  return bits * std::numbers::ln2 / (bandwidth_hz * (w + 1.0));
}

double ThetaSensitivity(double theta, double gamma, double bits,
                        double bandwidth_hz) {
  return RespondToTheta(theta, gamma, bits, bandwidth_hz).sensitivity;
}

ThetaResponse RespondToTheta(double theta, double gamma, double bits,
                             double bandwidth_hz) {
  const double w = LambertW0(LambertArgument(theta, gamma));
  const double wp1 = w + 1.0;
  ThetaResponse r;
  r.lambert_w = w;
  r.tau = bits * std::numbers::ln2 / (bandwidth_hz * wp1);
  r.sensitivity = -bits * gamma * std::numbers::ln2 /
                  (bandwidth_hz * wp1 * wp1 * wp1 * std::exp(wp1));
  return r;
}

InnerSolution SplitBudget(double tau_hat, const ChannelRealization& chan,
                          const SystemParams& params) {
  if (!(tau_hat > 0.0) || !std::isfinite(tau_hat)) {
    throw InfeasibleError("offload budget must be positive, got " +
                          std::to_string(tau_hat));
  }
  const double b = params.bandwidth_hz;
  const double l1 = params.task_bits_1;
  const double l2 = params.task_bits_2;
  // Decreasing in theta.
  auto excess = [&](double theta) {
    return TauOfTheta(theta, chan.gamma_1f, l1, b) +
           TauOfTheta(theta, chan.gamma_2f, l2, b) - tau_hat;
  };

  double lo = kInitialThetaLo;
  double hi = kInitialThetaHi;
  double f_lo = excess(lo);
  double f_hi = excess(hi);
  for (int i = 0; i < kMaxExpansions && (f_lo < 0.0 || f_hi > 0.0); ++i) {
    if (f_lo < 0.0) {
      lo *= 0.5;
      f_lo = excess(lo);
    }
    if (f_hi > 0.0) {
      hi *= 2.0;
      f_hi = excess(hi);
    }
  }
  if (f_lo < 0.0 || f_hi > 0.0) {
    throw InfeasibleError("could not bracket the budget multiplier");
  }

  double theta = f_lo == 0.0 ? lo : hi;
  if (f_lo != 0.0 && f_hi != 0.0) {
    for (int i = 0; i < kMaxBisections; ++i) {
      // Geometric steps while the bracket spans decades.
      theta = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
      if (theta <= lo || theta >= hi) break;
      const double f = excess(theta);
      if (std::abs(f) <= kBudgetTolerance * tau_hat) break;
      if (f > 0.0) {
        lo = theta;
      } else {
        hi = theta;
      }
    }
  }

  InnerSolution s;
  s.theta = theta;
  const ThetaResponse r1 = RespondToTheta(theta, chan.gamma_1f, l1, b);
  const ThetaResponse r2 = RespondToTheta(theta, chan.gamma_2f, l2, b);
  s.tau1 = r1.tau;
  s.tau2 = r2.tau;
  s.sensitivity1 = r1.sensitivity;
  s.sensitivity2 = r2.sensitivity;
  return s;
}

}  // namespace twrmec
