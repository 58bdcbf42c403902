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

#include "syzlab/kernels.hpp"

namespace syzlab::kernels {
namespace {

inline std::uint32_t mul_shoup(std::uint32_t x, std::uint32_t c, std::uint32_t cs, std::uint32_t p) {
  const std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(cs) * x) >> 32);
  std::uint32_t r = c * x - q * p;  // wraps; true value lies in [0, 2p)
  return r >= p ? r - p : r;
}

void submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t c,
                   std::uint32_t cs, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t r = mul_shoup(src[i], c, cs, p);
    const std::uint32_t t = dst[i] - r;
    dst[i] = dst[i] >= r ? t : t + p;
  }
}

void scale_scalar(std::uint32_t* row, std::size_t len, std::uint32_t c, std::uint32_t cs,
                  std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) row[i] = mul_shoup(row[i], c, cs, p);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &submul_scalar, &scale_scalar};
  return table;
}

}  // namespace syzlab::kernels
