/*
 * Copyright 2026 The syzygy-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "syzlab/kernels.hpp"

namespace syzlab::kernels {
namespace {

// Lane-wise Shoup product c*x mod p for eight 32-bit lanes.
inline __m256i mul_shoup8(__m256i x, __m256i c, __m256i cs, __m256i p) {
  // High 32 bits of cs*x: even lanes via mul_epu32 directly, odd lanes after a shift.
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, cs), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), cs);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(c, x), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t mul_shoup1(std::uint32_t x, std::uint32_t c, std::uint32_t cs, std::uint32_t p) {
  const std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(cs) * x) >> 32);
  std::uint32_t r = c * x - q * p;
  return r >= p ? r - p : r;
}

void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
                 std::uint32_t cs, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  // mul_epu32 reads the low 32 bits of each 64-bit lane.
  const __m256i vcs = _mm256_set1_epi64x(static_cast<long long>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i r = mul_shoup8(x, vc, vcs, vp);
    const __m256i t = _mm256_sub_epi32(y, r);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_min_epu32(t, _mm256_add_epi32(t, vp)));
  }
  for (; i < len; ++i) {
    const std::uint32_t r = mul_shoup1(src[i], c, cs, p);
    const std::uint32_t t = dst[i] - r;
    dst[i] = dst[i] >= r ? t : t + p;
  }
}

void scale_avx2(std::uint32_t* row, std::size_t len, std::uint32_t c, std::uint32_t cs,
                std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi64x(static_cast<long long>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mul_shoup8(x, vc, vcs, vp));
  }
  for (; i < len; ++i) row[i] = mul_shoup1(row[i], c, cs, p);
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", &submul_avx2, &scale_avx2};
  return table;
}

}  // namespace syzlab::kernels
