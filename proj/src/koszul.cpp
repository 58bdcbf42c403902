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

#include "syzlab/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "syzlab/arith.hpp"
#include "syzlab/error.hpp"

namespace syzlab {

Parameters Parameters::make(int n, int b, int d, int p, int q) {
  Parameters P;
  P.n = n;
  P.b = b;
  P.d = d;
  P.p = p;
  P.q = q;
  if (n < 1 || d < 1) throw DomainError("Parameters: need n >= 1 and d >= 1");
  P.v = binom_i64(d + n, n);
  P.r_d = P.v - 1;
  P.validate();
  return P;
}

void Parameters::validate() const {
  if (n < 1) throw DomainError("Parameters: n must be >= 1");
  if (d < 1) throw DomainError("Parameters: d must be >= 1");
  if (b < 0) throw DomainError("Parameters: b must be >= 0");
  if (p < 0) throw DomainError("Parameters: p must be >= 0");
  if (v != binom_i64(d + n, n) || r_d != v - 1)
    throw DomainError("Parameters: stored v / r_d inconsistent with (n, d)");
}

MonomialTable::MonomialTable(int n, int max_degree) : n_(n), empty_(n, -1) {
  for (int e = 0; e <= max_degree; ++e) bases_.emplace_back(n, e);
}

const GradedPieceBasis& MonomialTable::basis(int e) const {
  if (e < 0) return empty_;
  if (e > max_degree())
    throw DomainError("MonomialTable: degree " + std::to_string(e) + " above table maximum " +
                      std::to_string(max_degree()));
  return bases_[static_cast<std::size_t>(e)];
}

std::vector<Term> differential(const MonomialTable& table, int d, int e, const WedgeTensor& x) {
  const std::size_t k = x.wedge.size();
  if (k == 0) throw DomainError("differential: empty wedge");
  for (std::size_t j = 1; j < k; ++j)
    if (x.wedge[j - 1] >= x.wedge[j])
      throw DomainError("differential: wedge indices must be strictly increasing");
  const GradedPieceBasis& lin = table.basis(d);
  const GradedPieceBasis& src = table.basis(e);
  const GradedPieceBasis& dst = table.basis(e + d);
  if (x.wedge.back() >= lin.size() || x.tensor >= src.size())
    throw DomainError("differential: index out of range");

  std::vector<Term> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    WedgeTensor y;
    y.wedge.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) y.wedge.push_back(x.wedge[i]);
    ExponentVector prod = multiply(lin[x.wedge[j]], src[x.tensor]);
    y.tensor = static_cast<std::uint32_t>(dst.index_of(prod));
    out.push_back({std::move(y), (j % 2 == 0) ? 1 : -1});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.element < b.element; });
  return out;
}

namespace {

/// k-subsets of the degree-d basis whose exponent sum is <= w componentwise, in
/// lexicographic order, packed k indices per entry.
struct SubsetList {
  std::size_t k = 0;
  std::size_t count = 0;
  std::vector<std::uint32_t> flat;

  std::span<const std::uint32_t> at(std::size_t i) const { return {flat.data() + i * k, k}; }

  /// Position of s, or -1.
  std::ptrdiff_t find(std::span<const std::uint32_t> s) const {
    if (k == 0) return count == 1 ? 0 : -1;
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = at(mid);
      if (std::lexicographical_compare(m.begin(), m.end(), s.begin(), s.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count && std::equal(s.begin(), s.end(), at(lo).begin())) return static_cast<std::ptrdiff_t>(lo);
    return -1;
  }
};

class SubsetEnumerator {
 public:
  SubsetEnumerator(const GradedPieceBasis& mono, const Weight& w)
      : mono_(mono), nv_(static_cast<std::size_t>(mono.n()) + 1), w_(w.vec()) {}

  SubsetList list(int k) const {
    SubsetList out;
    if (k < 0) return out;
    out.k = static_cast<std::size_t>(k);
    if (k == 0) {
      out.count = 1;
      return out;
    }
    std::vector<int> rem = w_;
    std::vector<std::uint32_t> cur;
    walk(rem, cur, 0, out.k, [&](const std::vector<std::uint32_t>& s) {
      out.flat.insert(out.flat.end(), s.begin(), s.end());
      ++out.count;
      return true;
    });
    return out;
  }

  bool any(int k) const {
    if (k < 0) return false;
    if (k == 0) return true;
    std::vector<int> rem = w_;
    std::vector<std::uint32_t> cur;
    bool found = false;
    walk(rem, cur, 0, static_cast<std::size_t>(k), [&](const std::vector<std::uint32_t>&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  // Returns false once the visitor asks to stop.
  template <class Visit>
  bool walk(std::vector<int>& rem, std::vector<std::uint32_t>& cur, std::size_t start,
            std::size_t k, Visit&& visit) const {
    if (cur.size() == k) return visit(cur);
    const std::size_t need = k - cur.size();
    const std::size_t v = mono_.size();
    const int* flat = mono_.flat().data();
    for (std::size_t i = start; i + need <= v; ++i) {
      const int* m = flat + i * nv_;
      bool fits = true;
      for (std::size_t c = 0; c < nv_; ++c)
        if (m[c] > rem[c]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t c = 0; c < nv_; ++c) rem[c] -= m[c];
      cur.push_back(static_cast<std::uint32_t>(i));
      bool go = walk(rem, cur, i + 1, k, visit);
      cur.pop_back();
      for (std::size_t c = 0; c < nv_; ++c) rem[c] += m[c];
      if (!go) return false;
    }
    return true;
  }

  const GradedPieceBasis& mono_;
  std::size_t nv_;
  std::vector<int> w_;
};

bool middle_nonempty(const Parameters& P, const GradedPieceBasis& mono, const Weight& w) {
  return SubsetEnumerator(mono, w).any(P.p);
}

bool trivially_empty(const Parameters& P) { return P.p > P.v || P.mid_degree() < 0; }

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::size_t i,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (i + 1 == parts) {
    cur[i] = total;
    f(cur);
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur[i] = x;
    compositions(total - x, parts, cur, i + 1, f);
  }
}

void partitions(int total, int max_part, std::size_t parts, std::vector<int>& cur, std::size_t i,
                const std::function<void(const std::vector<int>&)>& f) {
  if (i == parts) {
    if (total == 0) f(cur);
    return;
  }
  const int hi = std::min(total, max_part);
  // The remaining parts.size()-i entries are each <= x, so x must reach total/(parts-i).
  for (int x = hi; x >= 0; --x) {
    if (static_cast<long>(x) * static_cast<long>(parts - i) < total) break;
    cur[i] = x;
    partitions(total - x, x, parts, cur, i + 1, f);
  }
}

std::uint64_t estimate_bytes(std::int64_t in, std::int64_t mid, std::int64_t out, int p) {
  const std::uint64_t nnz = static_cast<std::uint64_t>(in) * static_cast<std::uint64_t>(p + 1) +
                            static_cast<std::uint64_t>(mid) * static_cast<std::uint64_t>(p);
  const std::uint64_t basis = 4 * (static_cast<std::uint64_t>(in) * (p + 1) +
                                   static_cast<std::uint64_t>(mid) * p +
                                   static_cast<std::uint64_t>(out) * (p > 0 ? p - 1 : 0));
  // Triplets plus the row-list copy made by the rank routines.
  return nnz * (sizeof(Triplet) + 16) + basis;
}

SparseMatrix differential_matrix(const SubsetList& src, const SubsetList& dst) {
  std::vector<Triplet> t;
  if (src.k == 0 || dst.count == 0 || src.count == 0)
    return SparseMatrix(dst.count, src.count);
  t.reserve(src.count * src.k);
  std::vector<std::uint32_t> buf(src.k - 1);
  for (std::size_t c = 0; c < src.count; ++c) {
    auto s = src.at(c);
    for (std::size_t j = 0; j < src.k; ++j) {
      std::size_t o = 0;
      for (std::size_t i = 0; i < src.k; ++i)
        if (i != j) buf[o++] = s[i];
      std::ptrdiff_t r = dst.find(buf);
      if (r < 0) throw Error("differential_matrix: target basis element missing");
      t.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                   (j % 2 == 0) ? std::int64_t{1} : std::int64_t{-1}});
    }
  }
  return SparseMatrix::from_triplets(dst.count, src.count, std::move(t));
}

void check_weight(const Parameters& P, const Weight& w) {
  if (w.size() != static_cast<std::size_t>(P.n) + 1 || w.degree() != P.weight_degree())
    throw DomainError("weight does not belong to these parameters");
}

}  // namespace

std::vector<Weight> enumerate_weights(const Parameters& P) {
  P.validate();
  std::vector<Weight> out;
  if (trivially_empty(P)) return out;
  GradedPieceBasis mono(P.n, P.d);
  std::vector<int> cur(static_cast<std::size_t>(P.n) + 1);
  compositions(P.weight_degree(), cur.size(), cur, 0, [&](const std::vector<int>& c) {
    Weight w(c);
    if (middle_nonempty(P, mono, w)) out.push_back(std::move(w));
  });
  return out;
}

std::vector<Weight> dominant_weights(const Parameters& P) {
  P.validate();
  std::vector<Weight> out;
  if (trivially_empty(P)) return out;
  GradedPieceBasis mono(P.n, P.d);
  std::vector<int> cur(static_cast<std::size_t>(P.n) + 1);
  const int total = P.weight_degree();
  partitions(total, total, cur.size(), cur, 0, [&](const std::vector<int>& c) {
    Weight w(c);
    if (middle_nonempty(P, mono, w)) out.push_back(std::move(w));
  });
  return out;
}

std::int64_t orbit_size(const Weight& w) {
  std::vector<int> e = w.vec();
  std::sort(e.begin(), e.end());
  std::int64_t r = 1;
  for (std::size_t i = 1; i <= e.size(); ++i) r *= static_cast<std::int64_t>(i);
  std::size_t i = 0;
  while (i < e.size()) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    for (std::size_t m = 2; m <= j - i; ++m) r /= static_cast<std::int64_t>(m);
    i = j;
  }
  return r;
}

Weight dominant_representative(const Weight& w) {
  std::vector<int> e = w.vec();
  std::sort(e.begin(), e.end(), std::greater<>());
  return Weight(std::move(e));
}

BlockShape block_shape(const Parameters& P, const Weight& w) {
  P.validate();
  check_weight(P, w);
  GradedPieceBasis mono(P.n, P.d);
  SubsetEnumerator en(mono, w);
  BlockShape s;
  s.in_dim = static_cast<std::int64_t>(en.list(P.p + 1).count);
  s.mid_dim = static_cast<std::int64_t>(en.list(P.p).count);
  s.out_dim = static_cast<std::int64_t>(en.list(P.p - 1).count);
  s.estimated_bytes = estimate_bytes(s.in_dim, s.mid_dim, s.out_dim, P.p);
  return s;
}

KoszulBlock build_block(const Parameters& P, const Weight& w, const BlockOptions& opts) {
  P.validate();
  check_weight(P, w);
  GradedPieceBasis mono(P.n, P.d);
  SubsetEnumerator en(mono, w);
  SubsetList mid = en.list(P.p);
  SubsetList in = en.list(P.p + 1);
  SubsetList out = en.list(P.p - 1);
  // The middle tensor degree is q*d + b; when negative no subset fits below w anyway.
  if (P.mid_degree() < 0) mid = SubsetList{};

  KoszulBlock blk;
  blk.weight = w;
  blk.in_dim = static_cast<std::int64_t>(in.count);
  blk.mid_dim = static_cast<std::int64_t>(mid.count);
  blk.out_dim = static_cast<std::int64_t>(out.count);
  const std::uint64_t est = estimate_bytes(blk.in_dim, blk.mid_dim, blk.out_dim, P.p);
  if (est > opts.memory_cap_bytes)
    throw InfeasibleBlock(blk.in_dim, blk.mid_dim, blk.out_dim, est, opts.memory_cap_bytes);
  blk.d_in = differential_matrix(in, mid);
  blk.d_out = differential_matrix(mid, out);
  return blk;
}

std::vector<WedgeTensor> block_middle_basis(const Parameters& P, const Weight& w) {
  P.validate();
  check_weight(P, w);
  GradedPieceBasis mono(P.n, P.d);
  GradedPieceBasis tens(P.n, P.mid_degree());
  SubsetList mid = SubsetEnumerator(mono, w).list(P.p);
  std::vector<WedgeTensor> out;
  if (P.mid_degree() < 0) return out;
  for (std::size_t i = 0; i < mid.count; ++i) {
    WedgeTensor x;
    auto s = mid.at(i);
    x.wedge.assign(s.begin(), s.end());
    ExponentVector g = w;
    for (std::uint32_t m : x.wedge)
      for (std::size_t c = 0; c < g.size(); ++c) g[c] -= mono[m][c];
    x.tensor = static_cast<std::uint32_t>(tens.index_of(g));
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> all_subsets(std::size_t v, int k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k < 0 || static_cast<std::size_t>(k) > v) return out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
    if (cur.size() == static_cast<std::size_t>(k)) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t i = start; i < v; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct FullTerm {
  std::vector<std::vector<std::uint32_t>> subsets;
  std::map<std::vector<std::uint32_t>, std::size_t> subset_index;
  std::size_t tensors = 0;
  std::int64_t dim() const {
    return static_cast<std::int64_t>(subsets.size()) * static_cast<std::int64_t>(tensors);
  }
};

}  // namespace

FullComplex build_full_complex(const Parameters& P, std::int64_t max_mid_dim) {
  P.validate();
  const int e_in = (P.q - 1) * P.d + P.b;
  const int e_mid = P.q * P.d + P.b;
  const int e_out = (P.q + 1) * P.d + P.b;
  MonomialTable table(P.n, std::max({P.d, e_out, 0}));
  const std::size_t v = table.basis(P.d).size();

  auto make = [&](int k, int e) {
    FullTerm t;
    t.tensors = table.basis(e).size();
    if (t.tensors == 0) return t;
    t.subsets = all_subsets(v, k);
    for (std::size_t i = 0; i < t.subsets.size(); ++i) t.subset_index[t.subsets[i]] = i;
    return t;
  };
  FullTerm in = make(P.p + 1, e_in);
  FullTerm mid = make(P.p, e_mid);
  FullTerm out = make(P.p - 1, e_out);

  FullComplex fc;
  fc.in_dim = in.dim();
  fc.mid_dim = mid.dim();
  fc.out_dim = out.dim();
  if (fc.mid_dim > max_mid_dim)
    throw InfeasibleBlock(fc.in_dim, fc.mid_dim, fc.out_dim,
                          static_cast<std::uint64_t>(fc.mid_dim), static_cast<std::uint64_t>(max_mid_dim));

  auto matrix = [&](const FullTerm& src, int e_src, const FullTerm& dst) {
    std::vector<Triplet> t;
    if (src.dim() > 0 && dst.dim() > 0) {
      for (std::size_t s = 0; s < src.subsets.size(); ++s) {
        if (src.subsets[s].empty()) continue;
        for (std::size_t g = 0; g < src.tensors; ++g) {
          WedgeTensor x{src.subsets[s], static_cast<std::uint32_t>(g)};
          for (const Term& term : differential(table, P.d, e_src, x)) {
            std::size_t r = dst.subset_index.at(term.element.wedge) * dst.tensors + term.element.tensor;
            t.push_back({static_cast<std::uint32_t>(r),
                         static_cast<std::uint32_t>(s * src.tensors + g), term.coeff});
          }
        }
      }
    }
    return SparseMatrix::from_triplets(static_cast<std::size_t>(dst.dim()),
                                       static_cast<std::size_t>(src.dim()), std::move(t));
  };
  fc.d_in = matrix(in, e_in, mid);
  fc.d_out = matrix(mid, e_mid, out);
  return fc;
}

}  // namespace syzlab
