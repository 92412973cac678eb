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

// Compiled with -mavx2 -mfma; only reached through the runtime dispatch.

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "twrmec/kernels/offload_kernels.h"

namespace twrmec::kernels::avx2 {
namespace {

// expm1(r) for |r| <= ln2 / 2, Taylor series through r^13 (truncation error
// below 1e-17 relative).
inline __m256d Expm1Reduced(__m256d r) {
  constexpr double kInvFactorial[] = {
      1.0 / 2,          1.0 / 6,           1.0 / 24,           1.0 / 120,
      1.0 / 720,        1.0 / 5040,        1.0 / 40320,        1.0 / 362880,
      1.0 / 3628800,    1.0 / 39916800,    1.0 / 479001600,    1.0 / 6227020800};
  __m256d p = _mm256_set1_pd(kInvFactorial[11]);
  for (int k = 10; k >= 0; --k) {
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFactorial[k]));
  }
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  return _mm256_mul_pd(p, r);
}

// 2^n for integral n in [-1022, 1023] held as doubles.
inline __m256d Pow2(__m256d n) {
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i biased =
      _mm256_add_epi64(_mm256_cvtepi32_epi64(n32), _mm256_set1_epi64x(1023));
  return _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
}

// 2^x - 1 for x >= 0; overflows to +inf like the scalar path.
inline __m256d Exp2m1(__m256d x) {
  x = _mm256_min_pd(x, _mm256_set1_pd(2000.0));
  const __m256d n =
      _mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d f = _mm256_sub_pd(x, n);
  const __m256d p = Expm1Reduced(_mm256_mul_pd(f, _mm256_set1_pd(std::numbers::ln2)));

  // 2^n split in two factors so n up to 2000 overflows cleanly instead of
  // wrapping the exponent field.
  const __m256d n_lo = _mm256_floor_pd(_mm256_mul_pd(n, _mm256_set1_pd(0.5)));
  const __m256d n_hi = _mm256_sub_pd(n, n_lo);
  const __m256d scaled = _mm256_mul_pd(
      Pow2(n_lo), _mm256_mul_pd(Pow2(n_hi), _mm256_add_pd(_mm256_set1_pd(1.0), p)));
  const __m256d large = _mm256_sub_pd(scaled, _mm256_set1_pd(1.0));
  const __m256d is_zero = _mm256_cmp_pd(n, _mm256_setzero_pd(), _CMP_EQ_OQ);
  return _mm256_blendv_pd(large, p, is_zero);
}

inline __m256d Energy(__m256d tau, const PerspectiveTerm& term) {
  const __m256d x = _mm256_div_pd(_mm256_set1_pd(term.bits_per_hz), tau);
  return _mm256_mul_pd(_mm256_mul_pd(tau, Exp2m1(x)),
                       _mm256_set1_pd(term.inv_gamma));
}

}  // namespace

void OffloadEnergyBatch(std::span<const double> tau, PerspectiveTerm term,
                        std::span<double> out) {
  const std::size_t n = tau.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i, Energy(_mm256_loadu_pd(tau.data() + i), term));
  }
  for (; i < n; ++i) out[i] = PerspectiveEnergy(tau[i], term);
}

SplitMin MinSplitEnergy(double tau_hat, std::span<const double> fractions,
                        PerspectiveTerm first, PerspectiveTerm second) {
  const std::size_t n = fractions.size();
  const __m256d vtau = _mm256_set1_pd(tau_hat);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best_idx = _mm256_setzero_pd();
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t1 = _mm256_mul_pd(vtau, _mm256_loadu_pd(fractions.data() + i));
    const __m256d t2 = _mm256_sub_pd(vtau, t1);
    const __m256d e = _mm256_add_pd(Energy(t1, first), Energy(t2, second));
    const __m256d better = _mm256_cmp_pd(e, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, e, better);
    best_idx = _mm256_blendv_pd(best_idx, idx, better);
    idx = _mm256_add_pd(idx, four);
  }

  alignas(32) double lane_e[4];
  alignas(32) double lane_i[4];
  _mm256_store_pd(lane_e, best);
  _mm256_store_pd(lane_i, best_idx);
  SplitMin result{std::numeric_limits<double>::infinity(), 0};
  for (int l = 0; l < 4; ++l) {
    const auto li = static_cast<std::size_t>(lane_i[l]);
    if (lane_e[l] < result.energy ||
        (lane_e[l] == result.energy && li < result.index)) {
      result = {lane_e[l], li};
    }
  }
  for (; i < n; ++i) {
    const double t1 = tau_hat * fractions[i];
    const double t2 = tau_hat - t1;
    const double e = PerspectiveEnergy(t1, first) + PerspectiveEnergy(t2, second);
    if (e < result.energy) result = {e, i};
  }
  return result;
}

}  // namespace twrmec::kernels::avx2
