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

#include "twrmec/lambert_w.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twrmec {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr int kMaxIterations = 50;
constexpr double kRelativeTolerance = 1e-14;

double InitialGuess(double x) {
  // Distance to the branch point, p = sqrt(2 (e x + 1)).
  if (x < -0.25) {
    const double p = std::sqrt(2.0 * std::fma(std::numbers::e, x, 1.0));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  if (x < 0.5) {
    return x * (1.0 + x * (-1.0 + x * (1.5 + x * (-8.0 / 3.0))));
  }
  if (x < 3.0) {
    // Rough fit, Halley does the rest.
    return 0.5 * std::log1p(1.7 * x);
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double LambertW0(double x) {
  if (std::isnan(x) || x < -kInvE - kLambertDomainSlack) {
    throw std::domain_error("LambertW0: argument " + std::to_string(x) +
                            " below branch point -1/e");
  }
  if (x <= -kInvE) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = InitialGuess(x);
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 <= 0.0) {
      // Overshot the branch point; restart just above it.
      w = -1.0 + 1e-8;
      continue;
    }
    const double fp = ew * wp1;
    const double step = f / (fp - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= kRelativeTolerance * std::abs(w)) break;
  }
  return w < -1.0 ? -1.0 : w;
}

}  // namespace twrmec
