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

#include "syzlab/monomials.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "syzlab/error.hpp"

namespace syzlab {

ExponentVector::ExponentVector(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_)
    if (x < 0) throw DomainError("ExponentVector: negative exponent");
}

int ExponentVector::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::string ExponentVector::to_string() const {
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += e_.size() <= 4 ? std::string(kNames[i]) : "x" + std::to_string(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DomainError("multiply: exponent vectors of lengths " + std::to_string(a.size()) +
                      " and " + std::to_string(b.size()));
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

GradedPieceBasis::GradedPieceBasis(int n, int e) : n_(n), e_(e) {
  if (n < 1) throw DomainError("enumerate_basis: n must be >= 1");
  if (e < 0) return;
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  std::vector<int> cur(nv, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nv) {
      cur[i] = left;
      elems_.emplace_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, e);
  flat_.reserve(elems_.size() * nv);
  for (const auto& m : elems_) flat_.insert(flat_.end(), m.vec().begin(), m.vec().end());
}

std::ptrdiff_t GradedPieceBasis::index_of(const ExponentVector& m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m, std::greater<>());
  if (it == elems_.end() || *it != m) return -1;
  return it - elems_.begin();
}

GradedPieceBasis enumerate_basis(int n, int e) { return GradedPieceBasis(n, e); }

}  // namespace syzlab
