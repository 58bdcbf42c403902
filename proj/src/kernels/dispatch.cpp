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

#include <cstdlib>
#include <string_view>

#include "syzlab/kernels.hpp"

namespace syzlab::kernels {

#if defined(SYZLAB_HAVE_AVX2_TU)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(SYZLAB_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const KernelTable* k = avx2_kernels()) out.push_back(k);
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SYZ_SIMD");
    if (env && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* k = avx2_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace syzlab::kernels
