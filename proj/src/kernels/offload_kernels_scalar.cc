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

#include <limits>

#include "twrmec/kernels/offload_kernels.h"

namespace twrmec::kernels::scalar {

void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out) {
  for (std::size_t i = 0; i < tau.size(); ++i) {
    out[i] = PerspectiveEnergy(tau[i], term);
  }
}

SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second) {
  SplitMin best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const double t1 = tau_hat * fractions[i];
    const double t2 = tau_hat - t1;
    const double e = PerspectiveEnergy(t1, first) + PerspectiveEnergy(t2, second);
    if (e < best.energy) best = {e, i};
  }
  return best;
}

}  // namespace twrmec::kernels::scalar
