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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Row kernels for dense elimination over Z/pZ with p < 2^31. Every variant computes
// bit-identical results; variants differ only in instruction set.

namespace syzlab::kernels {

/// Largest modulus the 32-bit kernels accept (exclusive).
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// floor(c * 2^32 / p), the Shoup companion of a fixed multiplier c < p.
inline std::uint32_t shoup(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

/// dst[i] = (dst[i] - c * src[i]) mod p, all values in [0, p).
using SubmulFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                          std::uint32_t c, std::uint32_t c_shoup, std::uint32_t p);
/// row[i] = (c * row[i]) mod p.
using ScaleFn = void (*)(std::uint32_t* row, std::size_t len, std::uint32_t c,
                         std::uint32_t c_shoup, std::uint32_t p);

struct KernelTable {
  std::string_view name;
  SubmulFn submul;
  ScaleFn scale;
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 translation unit is not built or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Best available variant. SYZ_SIMD=scalar in the environment forces the reference path.
const KernelTable& active_kernels();

}  // namespace syzlab::kernels
