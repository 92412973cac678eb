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

#ifndef TWRMEC_KERNELS_OFFLOAD_KERNELS_H_
#define TWRMEC_KERNELS_OFFLOAD_KERNELS_H_

// Batch evaluation of the perspective transmit energy
//
//   E(tau) = tau * (2^(c / tau) - 1) / gamma,   c = bits / bandwidth,
//
// which is the energy needed to push `bits` through a Shannon-rate link of
// normalised gain `gamma` in `tau` seconds. The scalar kernels are the
// reference; the AVX2 kernels must agree with them to a few ulp and are
// selected at runtime when the CPU supports AVX2 and FMA.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>

namespace twrmec::kernels {

// One offload link: c = bits / bandwidth (seconds at 1 bit/s/Hz) and 1/gamma.
struct PerspectiveTerm {
  double bits_per_hz;
  double inv_gamma;
};

struct SplitMin {
  double energy;
  std::size_t index;
};

// 2^x - 1 without cancellation for small x.
inline double Exp2m1(double x) {
  return x < 1.0 ? std::expm1(x * std::numbers::ln2) : std::exp2(x) - 1.0;
}

inline double PerspectiveEnergy(double tau, PerspectiveTerm term) {
  return tau * Exp2m1(term.bits_per_hz / tau) * term.inv_gamma;
}

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// True when the AVX2 kernels are compiled in and the running CPU has AVX2+FMA.
bool Avx2Available();

// Kernel set used by the dispatching entry points below. Setting the
// environment variable TWRMEC_FORCE_SCALAR=1 pins it to kScalar.
Isa ActiveIsa();

// out[i] = PerspectiveEnergy(tau[i], term). Requires out.size() >= tau.size().
void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out);

// Minimises E_first(t1) + E_second(tau_hat - t1) over t1 = tau_hat * f for
// every f in `fractions` (each in (0, 1)). Ties resolve to the lowest index.
// An empty span yields {inf, 0}.
SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second);

namespace scalar {
void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out);
SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second);
}  // namespace scalar

#if defined(TWRMEC_HAVE_AVX2_KERNELS)
namespace avx2 {
// Callers must check Avx2Available() first.
void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out);
SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second);
}  // namespace avx2
#endif

}  // namespace twrmec::kernels

#endif  // TWRMEC_KERNELS_OFFLOAD_KERNELS_H_
