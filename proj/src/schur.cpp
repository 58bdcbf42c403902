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

#include "syzlab/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "syzlab/error.hpp"
#include "syzlab/parallel.hpp"

namespace syzlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("Partition: negative part");
    if (i && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::length() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

Partition Partition::padded(std::size_t m) const {
  if (length() > m) throw DomainError("Partition::padded: too many nonzero parts");
  std::vector<int> p(m, 0);
  std::copy_n(parts_.begin(), std::min(m, parts_.size()), p.begin());
  return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int total, std::size_t parts) {
  std::vector<Partition> out;
  if (total < 0 || parts == 0) {
    if (total == 0 && parts == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(parts, 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int left, int cap) {
    if (i == parts) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      if (static_cast<long>(x) * static_cast<long>(parts - i) < left) break;
      cur[i] = x;
      rec(i + 1, left - x, x);
    }
  };
  rec(0, total, total);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  const std::size_t m = std::max(lambda.parts().size(), mu.parts().size());
  long a = 0, b = 0;
  for (std::size_t i = 0; i < m; ++i) {
    a += i < lambda.parts().size() ? lambda.parts()[i] : 0;
    b += i < mu.parts().size() ? mu.parts()[i] : 0;
    if (a < b) return false;
  }
  return true;
}

namespace {

using KostkaMemo = std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>;

// Fills the last `len` content entries: strip a horizontal strip of size content[len-1].
std::int64_t kostka_rec(const std::vector<int>& shape, const std::vector<int>& content,
                        std::size_t len, KostkaMemo& memo) {
  if (len == 0) return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
  auto key = std::make_pair(shape, len);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int strip = content[len - 1];
  std::int64_t total = 0;
  std::vector<int> inner(shape.size());
  // inner_i ranges over [shape_{i+1}, shape_i]; boxes removed must total `strip`.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == shape.size()) {
      if (left == 0) total += kostka_rec(inner, content, len - 1, memo);
      return;
    }
    const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int x = shape[i]; x >= below; --x) {
      const int removed = shape[i] - x;
      if (removed > left) break;
      inner[i] = x;
      rec(i + 1, left - removed);
    }
  };
  rec(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t kostka(const Partition& lambda, const Weight& mu) {
  if (lambda.size() != mu.degree()) throw DomainError("kostka: |lambda| != |mu|");
  std::vector<int> content = mu.vec();
  std::sort(content.begin(), content.end(), std::greater<>());
  // Tableaux entries are 1..len(mu), so shapes with more rows than that admit none.
  if (lambda.length() > content.size()) return 0;
  if (!dominates(lambda, Partition(content))) return 0;
  KostkaMemo memo;
  return kostka_rec(lambda.padded(content.size()).parts(), content, content.size(), memo);
}

BigInt weyl_dim(const Partition& lambda, int m) {
  if (m < 0 || lambda.length() > static_cast<std::size_t>(m))
    throw DomainError("weyl_dim: partition has more than m nonzero parts");
  const std::vector<int> l = lambda.padded(static_cast<std::size_t>(m)).parts();
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= l[i] - l[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::map<Weight, std::int64_t> weight_space_dims(const Parameters& P, const EngineConfig& cfg) {
  if (cfg.mode == FieldMode::OnePrime)
    throw DomainError("weight_space_dims: one-prime certification cannot feed a characteristic-0 decomposition");
  std::map<Weight, std::int64_t> out;
  const std::size_t nv = static_cast<std::size_t>(P.n) + 1;
  if (P.q > P.n + 1 || P.p >= P.v || P.mid_degree() < 0) {
    for (const Partition& mu : partitions_of(P.weight_degree(), nv)) out[Weight(mu.parts())] = 0;
    return out;
  }
  const std::vector<Partition> mus = partitions_of(P.weight_degree(), nv);
  const std::vector<Weight> nonempty = dominant_weights(P);
  std::vector<std::int64_t> dims(nonempty.size());
  parallel_for(nonempty.size(), cfg.threads, [&](std::size_t i) {
    BlockCohomology bc = block_cohomology(P, nonempty[i], cfg);
    if (!bc.agreement)
      throw Error("weight_space_dims: primes disagree at weight " + nonempty[i].to_string() +
                  "; rerun at a higher certification level");
    dims[i] = bc.dim;
  });
  for (const Partition& mu : mus) out[Weight(mu.parts())] = 0;
  for (std::size_t i = 0; i < nonempty.size(); ++i) out[nonempty[i]] = dims[i];
  return out;
}

SchurMultiplicityTable schur_multiplicities(const Parameters& P, const EngineConfig& cfg) {
  SchurMultiplicityTable t;
  t.params = P;
  t.weight_dims = weight_space_dims(P, cfg);
  const std::size_t nv = static_cast<std::size_t>(P.n) + 1;

  // Spot-check c_mu = c_{sigma mu} on a few non-dominant weights.
  std::mt19937_64 gen(0x5eed);
  int sampled = 0;
  for (const auto& [mu, c] : t.weight_dims) {
    if (c == 0 || sampled >= 3) continue;
    std::vector<int> e = mu.vec();
    std::shuffle(e.begin(), e.end(), gen);
    if (e == mu.vec()) std::reverse(e.begin(), e.end());
    if (e == mu.vec()) continue;
    const Weight w(e);
    if (block_cohomology(P, w, cfg).dim != c)
      throw Error("schur_multiplicities: weight " + w.to_string() + " breaks permutation symmetry");
    ++sampled;
  }

  const std::vector<Partition> lambdas = partitions_of(P.weight_degree(), nv);
  std::vector<std::pair<Partition, std::int64_t>> found;
  std::int64_t weight_total = 0;
  for (const auto& [mu, c] : t.weight_dims) weight_total += c * orbit_size(mu);
  BigInt total = 0;
  for (const Partition& lambda : lambdas) {
    const Weight lw(lambda.parts());
    std::int64_t m = t.weight_dims.at(lw);
    for (const auto& [nu, mnu] : found) m -= mnu * kostka(nu, lw);
    if (m < 0)
      throw NegativeMultiplicity("schur_multiplicities: M < 0 for a partition of " +
                                 std::to_string(lambda.size()) +
                                 "; modular ranks undercounted, rerun at exact certification");
    if (m > 0) {
      found.emplace_back(lambda, m);
      total += BigInt(m) * weyl_dim(lambda, static_cast<int>(nv));
    }
  }
  if (total != weight_total)
    throw Error("schur_multiplicities: sum M * weyl_dim != dimension from weight spaces");
  t.entries = std::move(found);
  t.total_dim = static_cast<std::int64_t>(total);
  return t;
}

StabilityReport stability_check(int b, int d, int p, int q, const std::vector<int>& n_list,
                                const EngineConfig& cfg) {
  StabilityReport rep;
  std::optional<bool> nonzero;
  for (int n : n_list) {
    StabilityEntry e;
    e.n = n;
    e.included = n >= p;
    e.dim = kpq_dim(Parameters::make(n, b, d, p, q), cfg).dim;
    if (e.included) {
      if (nonzero && *nonzero != (e.dim > 0)) rep.consistent = false;
      nonzero = e.dim > 0;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace syzlab
