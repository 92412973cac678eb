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

#include "twrmec/harness/channel_sampler.h"

#include <cmath>

namespace twrmec {

std::mt19937_64 TrialGenerator(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

double SampleExponential(std::mt19937_64& rng, double mean) {
  // (0, 1], so the draw is strictly positive and finite.
  const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
  return -mean * std::log(u);
}

ChannelRealization SampleChannels(std::mt19937_64& rng, double avg_power_loss,
                                  double noise_power_w) {
  ChannelRealization c;
  c.gamma_1f = SampleExponential(rng, avg_power_loss) / noise_power_w;
  c.gamma_2f = SampleExponential(rng, avg_power_loss) / noise_power_w;
  c.gamma_1b = SampleExponential(rng, avg_power_loss) / noise_power_w;
  c.gamma_2b = SampleExponential(rng, avg_power_loss) / noise_power_w;
  return c;
}

}  // namespace twrmec
