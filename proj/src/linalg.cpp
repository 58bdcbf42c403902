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

#include "syzlab/linalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "syzlab/error.hpp"

namespace syzlab {

std::int64_t dense_rank_mod_p(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                              std::uint32_t p, const kernels::KernelTable& k) {
  if (p >= kernels::kMaxModulus) throw DomainError("dense_rank_mod_p: modulus must be < 2^31");
  const PrimeField F(p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    std::uint32_t* top = a.data() + rank * cols;
    if (piv != rank) std::swap_ranges(top + c, top + cols, a.data() + piv * cols + c);
    const auto inv = static_cast<std::uint32_t>(F.inv(top[c]));
    k.scale(top + c, cols - c, inv, kernels::shoup(inv, p), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = a.data() + r * cols;
      const std::uint32_t f = row[c];
      if (f != 0) k.submul(row + c, top + c, cols - c, f, kernels::shoup(f, p), p);
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

namespace {

std::int64_t dense_rank_mod_p64(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                const PrimeField& F) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    std::uint64_t* top = a.data() + rank * cols;
    if (piv != rank) std::swap_ranges(top + c, top + cols, a.data() + piv * cols + c);
    const std::uint64_t inv = F.inv(top[c]);
    for (std::size_t j = c; j < cols; ++j) top[j] = F.mul(top[j], inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = a.data() + r * cols;
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) row[j] = F.sub(row[j], F.mul(f, top[j]));
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

/// Right-looking sparse elimination with Markowitz pivoting.
class MarkowitzEliminator {
 public:
  MarkowitzEliminator(const SparseMatrix& m, const PrimeField& F, const RankOptions& opts)
      : F_(F), opts_(opts), cols_(m.rows() ? m.cols() : 0) {
    row_cols_.resize(m.rows());
    row_vals_.resize(m.rows());
    for (const Triplet& t : m.entries()) {
      const std::uint64_t v = F_.reduce(t.val);
      if (v == 0) continue;
      row_cols_[t.row].push_back(t.col);
      row_vals_[t.row].push_back(v);
    }
    alive_.assign(m.rows(), 0);
    col_rows_.resize(cols_);
    col_count_.assign(cols_, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (row_cols_[r].empty()) continue;
      alive_[r] = 1;
      ++alive_rows_;
      nnz_ += row_cols_[r].size();
      for (std::uint32_t c : row_cols_[r]) {
        col_rows_[c].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[c];
      }
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (col_count_[c]) queue_.insert({col_count_[c], static_cast<std::uint32_t>(c)});
    dirty_.assign(cols_, 0);
    queued_count_.assign(cols_, 0);
  }

  std::int64_t run() {
    std::int64_t rank = 0;
    while (!queue_.empty()) {
      if (dense_is_better()) return rank + finish_dense();
      auto [r0, c0] = choose_pivot();
      eliminate(r0, c0);
      ++rank;
    }
    return rank;
  }

 private:
  bool dense_is_better() const {
    const std::uint64_t area = static_cast<std::uint64_t>(alive_rows_) * queue_.size();
    return area <= opts_.dense_max_entries &&
           static_cast<double>(nnz_) >= opts_.dense_switch_density * static_cast<double>(area);
  }

  std::ptrdiff_t position(std::uint32_t r, std::uint32_t c) const {
    const auto& cs = row_cols_[r];
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    return (it != cs.end() && *it == c) ? it - cs.begin() : -1;
  }

  void compact_column(std::uint32_t c) {
    auto& rows = col_rows_[c];
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::erase_if(rows, [&](std::uint32_t r) { return !alive_[r] || position(r, c) < 0; });
  }

  std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
    std::uint64_t best_cost = ~std::uint64_t{0};
    std::pair<std::uint32_t, std::uint32_t> best{0, 0};
    int seen = 0;
    for (auto it = queue_.begin(); it != queue_.end() && seen < opts_.markowitz_columns;
         ++it, ++seen) {
      const std::uint32_t c = it->second;
      compact_column(c);
      const std::uint64_t cc = col_count_[c] - 1;
      for (std::uint32_t r : col_rows_[c]) {
        const std::uint64_t cost = (row_cols_[r].size() - 1) * cc;
        if (cost < best_cost) {
          best_cost = cost;
          best = {r, c};
        }
      }
      if (best_cost == 0) break;
    }
    return best;
  }

  // Counts change freely during a pivot step; the queue is resynchronised once per
  // touched column in flush_counts().
  void set_count(std::uint32_t c, std::uint32_t n) {
    if (!dirty_[c]) {
      dirty_[c] = 1;
      queued_count_[c] = col_count_[c];
      touched_.push_back(c);
    }
    col_count_[c] = n;
  }

  void flush_counts() {
    for (std::uint32_t c : touched_) {
      dirty_[c] = 0;
      if (queued_count_[c] == col_count_[c]) continue;
      if (queued_count_[c]) queue_.erase({queued_count_[c], c});
      if (col_count_[c]) queue_.insert({col_count_[c], c});
    }
    touched_.clear();
  }

  void eliminate(std::uint32_t r0, std::uint32_t c0) {
    const auto& pc = row_cols_[r0];
    const auto& pv = row_vals_[r0];
    const std::uint64_t inv = F_.inv(pv[static_cast<std::size_t>(position(r0, c0))]);
    std::vector<std::uint32_t> targets = col_rows_[c0];
    std::vector<std::uint32_t> nc;
    std::vector<std::uint64_t> nv;
    for (std::uint32_t r : targets) {
      if (r == r0) continue;
      auto& rc = row_cols_[r];
      auto& rv = row_vals_[r];
      const std::uint64_t f = F_.mul(rv[static_cast<std::size_t>(position(r, c0))], inv);
      nc.clear();
      nv.clear();
      std::size_t i = 0, j = 0;
      while (i < rc.size() || j < pc.size()) {
        if (j == pc.size() || (i < rc.size() && rc[i] < pc[j])) {
          nc.push_back(rc[i]);
          nv.push_back(rv[i]);
          ++i;
        } else if (i == rc.size() || pc[j] < rc[i]) {
          nc.push_back(pc[j]);
          nv.push_back(F_.neg(F_.mul(f, pv[j])));
          set_count(pc[j], col_count_[pc[j]] + 1);
          col_rows_[pc[j]].push_back(r);
          ++j;
        } else {
          const std::uint64_t x = F_.sub(rv[i], F_.mul(f, pv[j]));
          if (x != 0) {
            nc.push_back(rc[i]);
            nv.push_back(x);
          } else {
            set_count(rc[i], col_count_[rc[i]] - 1);
          }
          ++i;
          ++j;
        }
      }
      nnz_ = nnz_ - rc.size() + nc.size();
      rc.swap(nc);
      rv.swap(nv);
      if (rc.empty()) {
        alive_[r] = 0;
        --alive_rows_;
      }
    }
    for (std::uint32_t c : pc) set_count(c, col_count_[c] - 1);
    nnz_ -= pc.size();
    alive_[r0] = 0;
    --alive_rows_;
    col_rows_[c0].clear();
    row_cols_[r0].clear();
    row_vals_[r0].clear();
    flush_counts();
  }

  std::int64_t finish_dense() {
    std::vector<std::uint32_t> col_map(cols_, ~std::uint32_t{0});
    std::vector<std::uint32_t> live_cols;
    for (const auto& [cnt, c] : queue_) live_cols.push_back(c);
    std::sort(live_cols.begin(), live_cols.end());
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_map[live_cols[i]] = static_cast<std::uint32_t>(i);
    const std::size_t nc = live_cols.size();
    std::vector<std::size_t> live_rows;
    for (std::size_t r = 0; r < alive_.size(); ++r)
      if (alive_[r]) live_rows.push_back(r);
    const std::size_t nr = live_rows.size();

    if (F_.modulus() < kernels::kMaxModulus) {
      std::vector<std::uint32_t> a(nr * nc, 0);
      for (std::size_t i = 0; i < nr; ++i) {
        const auto& rc = row_cols_[live_rows[i]];
        const auto& rv = row_vals_[live_rows[i]];
        for (std::size_t t = 0; t < rc.size(); ++t)
          a[i * nc + col_map[rc[t]]] = static_cast<std::uint32_t>(rv[t]);
      }
      const kernels::KernelTable& k = opts_.kernels ? *opts_.kernels : kernels::active_kernels();
      return dense_rank_mod_p(a, nr, nc, static_cast<std::uint32_t>(F_.modulus()), k);
    }
    std::vector<std::uint64_t> a(nr * nc, 0);
    for (std::size_t i = 0; i < nr; ++i) {
      const auto& rc = row_cols_[live_rows[i]];
      const auto& rv = row_vals_[live_rows[i]];
      for (std::size_t t = 0; t < rc.size(); ++t) a[i * nc + col_map[rc[t]]] = rv[t];
    }
    return dense_rank_mod_p64(a, nr, nc, F_);
  }

  const PrimeField& F_;
  const RankOptions& opts_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::vector<std::uint64_t>> row_vals_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> queue_;
  std::vector<char> dirty_;
  std::vector<std::uint32_t> queued_count_;
  std::vector<std::uint32_t> touched_;
  std::size_t alive_rows_ = 0;
  std::uint64_t nnz_ = 0;
};

}  // namespace

std::int64_t rank_mod_p(const SparseMatrix& m, const PrimeField& field, const RankOptions& opts) {
  if (m.nnz() == 0) return 0;
  // Eliminate along the shorter dimension's complement: rows are pivoted away, so keep
  // the row count no larger than the column count.
  if (m.rows() > m.cols()) {
    SparseMatrix t = m.transpose();
    return MarkowitzEliminator(t, field, opts).run();
  }
  return MarkowitzEliminator(m, field, opts).run();
}

std::int64_t rational_rank(const SparseMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (m.nnz() == 0) return 0;
  std::vector<BigInt> a(rows * cols);
  for (const Triplet& t : m.entries()) a[t.row * cols + t.col] = t.val;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const BigInt pv = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt f = a[r * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j)
        a[r * cols + j] = (pv * a[r * cols + j] - f * a[rank * cols + j]) / prev;
      a[r * cols + c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

RankCertificate certified_rank(const SparseMatrix& m, std::span<const std::uint64_t> primes,
                               std::int64_t exact_threshold, const RankOptions& opts) {
  if (primes.size() < 2) throw DomainError("certified_rank: at least two primes required");
  RankCertificate cert;
  for (std::uint64_t p : primes) {
    cert.primes_used.push_back(p);
    cert.modular_ranks.push_back(rank_mod_p(m, PrimeField(p), opts));
  }
  const std::int64_t hi = *std::max_element(cert.modular_ranks.begin(), cert.modular_ranks.end());
  cert.agreement = std::all_of(cert.modular_ranks.begin(), cert.modular_ranks.end(),
                               [&](std::int64_t r) { return r == hi; });
  const auto area = static_cast<long double>(m.rows()) * static_cast<long double>(m.cols());
  if (area <= static_cast<long double>(exact_threshold)) {
    cert.rank = rational_rank(m);
    cert.exact_over_rationals = true;
    if (hi > cert.rank) throw Error("certified_rank: modular rank exceeds rational rank");
  } else {
    cert.rank = hi;
  }
  return cert;
}

}  // namespace syzlab
