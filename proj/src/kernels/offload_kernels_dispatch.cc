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

#include <cstdlib>
#include <cstring>

#include "twrmec/kernels/offload_kernels.h"

namespace twrmec::kernels {
namespace {

Isa DetectIsa() {
  if (const char* force = std::getenv("TWRMEC_FORCE_SCALAR");
      force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0') {
    return Isa::kScalar;
  }
  return Avx2Available() ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool Avx2Available() {
#if defined(TWRMEC_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa ActiveIsa() {
  static const Isa isa = DetectIsa();
  return isa;
}

void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out) {
#if defined(TWRMEC_HAVE_AVX2_KERNELS)
  if (ActiveIsa() == Isa::kAvx2) return avx2::OffloadEnergyBatch(tau, term, out);
#endif
  scalar::OffloadEnergyBatch(tau, term, out);
}

SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second) {
#if defined(TWRMEC_HAVE_AVX2_KERNELS)
  if (ActiveIsa() == Isa::kAvx2) {
    return avx2::MinSplitEnergy(tau_hat, fractions, first, second);
  }
#endif
  return scalar::MinSplitEnergy(tau_hat, fractions, first, second);
}

}  // namespace twrmec::kernels
