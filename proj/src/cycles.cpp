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

#include "syzlab/cycles.hpp"

#include <algorithm>
#include <set>

#include "syzlab/arith.hpp"
#include "syzlab/error.hpp"

namespace syzlab {

void KoszulChain::add(std::vector<std::uint32_t> wedge, std::uint32_t tensor, std::int64_t c) {
  if (c == 0) return;
  // Insertion sort, counting transpositions.
  int sign = 1;
  for (std::size_t i = 1; i < wedge.size(); ++i)
    for (std::size_t j = i; j > 0 && wedge[j - 1] > wedge[j]; --j) {
      std::swap(wedge[j - 1], wedge[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < wedge.size(); ++i)
    if (wedge[i - 1] == wedge[i]) return;
  WedgeTensor key{std::move(wedge), tensor};
  auto [it, inserted] = terms.try_emplace(std::move(key), 0);
  it->second += sign * c;
  if (it->second == 0) terms.erase(it);
}

KoszulChain build_kp0_cycle(int n, int b, int d, int p, std::span<const std::uint32_t> f,
                            std::uint32_t s_index) {
  if (n < 1 || b < 0 || p < 0) throw DomainError("build_kp0_cycle: need n >= 1, b >= 0, p >= 0");
  if (d < b + 1) throw DomainError("build_kp0_cycle: need d >= b+1");
  if (f.size() != static_cast<std::size_t>(p) + 1)
    throw DomainError("build_kp0_cycle: need exactly p+1 degree-b monomials");
  if (binom_safe(n + b, n) < p + 1)
    throw DomainError("build_kp0_cycle: p+1 exceeds h0(O(b)); not enough independent f's");
  const GradedPieceBasis fb(n, b), sb(n, d - b), lin(n, d);
  if (s_index >= sb.size()) throw DomainError("build_kp0_cycle: s index out of range");
  std::set<std::uint32_t> seen_f, seen_prod;
  std::vector<std::uint32_t> prod(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] >= fb.size()) throw DomainError("build_kp0_cycle: f index out of range");
    if (!seen_f.insert(f[j]).second) throw DomainError("build_kp0_cycle: the f_j must be distinct");
    prod[j] = static_cast<std::uint32_t>(lin.index_of(multiply(fb[f[j]], sb[s_index])));
    if (!seen_prod.insert(prod[j]).second)
      throw DomainError("build_kp0_cycle: products f_j*s coincide; choose a different s");
  }
  KoszulChain alpha;
  alpha.n = n;
  alpha.b = b;
  alpha.d = d;
  alpha.p = p;
  alpha.q = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::vector<std::uint32_t> wedge;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != j) wedge.push_back(prod[i]);
    alpha.add(std::move(wedge), f[j], j % 2 == 0 ? 1 : -1);
  }
  return alpha;
}

KoszulChain default_kp0_cycle(int n, int b, int d, int p) {
  std::vector<std::uint32_t> f(static_cast<std::size_t>(std::max(p, -1) + 1));
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::uint32_t>(i);
  // x_0^{d-b} is first in lexicographic order.
  return build_kp0_cycle(n, b, d, p, f, 0);
}

std::map<WedgeTensor, std::int64_t> apply_differential(const KoszulChain& c) {
  const int e = c.q * c.d + c.b;
  MonomialTable table(c.n, std::max(c.d, e + c.d));
  KoszulChain out;
  for (const auto& [x, coeff] : c.terms) {
    if (x.wedge.empty()) continue;
    for (const Term& t : differential(table, c.d, e, x))
      out.add(t.element.wedge, t.element.tensor, coeff * t.coeff);
  }
  return out.terms;
}

bool verify_nonzero_class(const KoszulChain& c) {
  if (c.q != 0 || c.b >= c.d)
    throw DomainError("verify_nonzero_class: needs q = 0 and b < d (no boundaries there)");
  return !c.is_zero() && apply_differential(c).empty();
}

std::string chain_to_string(const KoszulChain& c) {
  const GradedPieceBasis lin(c.n, c.d), tens(c.n, c.q * c.d + c.b);
  std::string s;
  for (const auto& [x, coeff] : c.terms) {
    if (!s.empty()) s += ' ';
    s += (coeff > 0 ? "+" : "") + std::to_string(coeff) + " (";
    for (std::size_t i = 0; i < x.wedge.size(); ++i) {
      if (i) s += " ^ ";
      s += lin[x.wedge[i]].to_string();
    }
    if (x.wedge.empty()) s += "1";
    s += ") ⊗ " + tens[x.tensor].to_string();
  }
  return s.empty() ? "0" : s;
}

}  // namespace syzlab
