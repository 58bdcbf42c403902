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

#include "syzlab/sparse_matrix.hpp"

#include <algorithm>

#include "syzlab/error.hpp"

namespace syzlab {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
  for (const Triplet& t : entries)
    if (t.row >= rows || t.col >= cols) throw DomainError("SparseMatrix: index out of range");
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseMatrix m(rows, cols);
  m.entries_.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().val += t.val;
      if (m.entries_.back().val == 0) m.entries_.pop_back();
    } else if (t.val != 0) {
      m.entries_.push_back(t);
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw DomainError("SparseMatrix::from_dense: ragged input");
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0)
        t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), a[i][j]});
  }
  return from_triplets(rows, cols, std::move(t));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const Triplet& e : entries_) t.push_back({e.col, e.row, e.val});
  return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("SparseMatrix::multiply: shape mismatch");
  // Row-major rhs lookup.
  std::vector<std::size_t> start(rhs.rows_ + 1, 0);
  for (const Triplet& e : rhs.entries_) ++start[e.row + 1];
  for (std::size_t i = 0; i < rhs.rows_; ++i) start[i + 1] += start[i];
  std::vector<Triplet> t;
  for (const Triplet& a : entries_)
    for (std::size_t k = start[a.col]; k < start[a.col + 1]; ++k) {
      const Triplet& b = rhs.entries_[k];
      t.push_back({a.row, b.col, a.val * b.val});
    }
  return from_triplets(rows_, rhs.cols_, std::move(t));
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> a(rows_, std::vector<std::int64_t>(cols_, 0));
  for (const Triplet& e : entries_) a[e.row][e.col] = e.val;
  return a;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Triplet &a = entries_[i], &b = o.entries_[i];
    if (a.row != b.row || a.col != b.col || a.val != b.val) return false;
  }
  return true;
}

}  // namespace syzlab
