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
#include <vector>

namespace syzlab {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t val;
};

/// Integer sparse matrix in canonical coordinate form: entries sorted by (row, col),
/// no duplicate positions, no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Sums duplicates and drops zeros; throws DomainError on out-of-range indices.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> entries);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Triplet>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  SparseMatrix transpose() const;
  /// Exact integer product this * rhs.
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  bool operator==(const SparseMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

}  // namespace syzlab
