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

#ifndef TWRMEC_HARNESS_CHANNEL_SAMPLER_H_
#define TWRMEC_HARNESS_CHANNEL_SAMPLER_H_

// i.i.d. Rayleigh fading draws.
//
// Seeding recipe: trial t of a run with seed s uses std::mt19937_64 seeded
// from std::seed_seq{lo32(s), hi32(s), lo32(t), hi32(t)}. Both engine and
// seed_seq are fully specified by the C++ standard, so draws do not depend on
// the standard library or on the order in which trials are executed. The four
// gains are drawn in the order 1f, 2f, 1b, 2b; each exponential variate is
// -mean * log(u) with u = ((next() >> 11) + 1) * 2^-53 in (0, 1].

#include <cstdint>
#include <random>

#include "twrmec/system_model.h"

namespace twrmec {

std::mt19937_64 TrialGenerator(std::uint64_t seed, std::uint64_t trial);

// Exponential variate with the given mean (Rayleigh amplitude => exponential
// power).
double SampleExponential(std::mt19937_64& rng, double mean);

// |h|^2 ~ Exp(avg_power_loss) per link, gamma = |h|^2 / sigma^2.
ChannelRealization SampleChannels(std::mt19937_64& rng, double avg_power_loss,
                                  double noise_power_w);

}  // namespace twrmec

#endif  // TWRMEC_HARNESS_CHANNEL_SAMPLER_H_
