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

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "syzlab/koszul.hpp"

namespace syzlab {

/// Integer combination of wedge-tensors in Lambda^p S^d ⊗ S^{qd+b}, with strictly
/// increasing wedges and no zero coefficients.
struct KoszulChain {
  int n = 1, b = 0, d = 1, p = 0, q = 0;
  std::map<WedgeTensor, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  /// Adds c * x, re-sorting x's wedge with sign; repeated indices contribute nothing.
  void add(std::vector<std::uint32_t> wedge, std::uint32_t tensor, std::int64_t c);
};

/// alpha = sum_j (-1)^j (f_0 s ^ .. omit f_j s .. ^ f_p s) ⊗ f_j, a weight-0 cycle.
/// f_indices index the degree-b basis, s_index the degree-(d-b) basis.
/// Throws DomainError unless d >= b+1, p+1 = |f| <= C(n+b, n), the f_j are distinct
/// and the products f_j s are distinct.
KoszulChain build_kp0_cycle(int n, int b, int d, int p, std::span<const std::uint32_t> f_indices,
                            std::uint32_t s_index);

/// f_j the first p+1 monomials of degree b, s = x_0^{d-b}.
KoszulChain default_kp0_cycle(int n, int b, int d, int p);

/// delta(chain), exactly over the integers.
std::map<WedgeTensor, std::int64_t> apply_differential(const KoszulChain& chain);

/// True iff chain != 0 and delta(chain) == 0. With q = 0 and b < d there are no
/// boundaries, so this certifies a nonzero class in K_{p,0}. Throws DomainError otherwise.
bool verify_nonzero_class(const KoszulChain& chain);

/// "+1 (x^2*y) ⊗ x -1 (x^3) ⊗ y", wedge factors joined by " ^ ".
std::string chain_to_string(const KoszulChain& chain);

}  // namespace syzlab
