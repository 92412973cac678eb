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

#ifndef TWRMEC_INNER_ALLOCATOR_H_
#define TWRMEC_INNER_ALLOCATOR_H_

// Splits a total offload time tau_hat = tau1 + tau2 between the two users so
// that E1 + E2 is minimal. With dual variable theta on the budget constraint
// the stationarity conditions give
//
//   tau_i(theta) = L_i ln2 / (B (W0((theta gamma_i - 1) / e) + 1)),
//
// and theta is found by bisection so that the budget is met.

#include "twrmec/system_model.h"

namespace twrmec {

struct InnerSolution {
  double tau1 = 0.0;
  double tau2 = 0.0;
  double theta = 0.0;         // budget multiplier, J/s
  double sensitivity1 = 0.0;  // dtau1/dtheta (< 0)
  double sensitivity2 = 0.0;  // dtau2/dtheta (< 0)
};

// Budget cannot be met (tau_hat <= 0 or no sign change for theta).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double TauOfTheta(double theta, double gamma, double bits, double bandwidth_hz);

// Derivative of TauOfTheta with respect to theta:
// -L gamma ln2 / (B (W + 1)^3 e^(W + 1)), W = W0((theta gamma - 1) / e).
double ThetaSensitivity(double theta, double gamma, double bits,
                        double bandwidth_hz);

struct ThetaResponse {
  double lambert_w;
  double tau;
  double sensitivity;
};

// TauOfTheta and ThetaSensitivity sharing one Lambert-W evaluation.
ThetaResponse RespondToTheta(double theta, double gamma, double bits,
                             double bandwidth_hz);

// Throws InfeasibleError for tau_hat <= 0.
InnerSolution SplitBudget(double tau_hat, const ChannelRealization& chan,
                          const SystemParams& params);

}  // namespace twrmec

#endif  // TWRMEC_INNER_ALLOCATOR_H_
