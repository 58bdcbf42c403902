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
#include <span>
#include <vector>

#include "syzlab/arith.hpp"
#include "syzlab/kernels.hpp"
#include "syzlab/sparse_matrix.hpp"

namespace syzlab {

struct RankOptions {
  /// Hand the active submatrix to dense elimination once nnz / (rows*cols) reaches this.
  double dense_switch_density = 0.05;
  /// Never densify a submatrix with more entries than this.
  std::uint64_t dense_max_entries = std::uint64_t{1} << 26;
  /// Pivot candidates are drawn from this many lowest-count columns.
  int markowitz_columns = 4;
  /// Row kernels for the dense phase; nullptr selects kernels::active_kernels().
  const kernels::KernelTable* kernels = nullptr;
};

/// Rank over Z/pZ. Entries are reduced mod p first. Sparse Markowitz elimination
/// (pivot minimizing (row nnz - 1) * (col nnz - 1)) that finishes densely once fill
/// makes the remainder dense.
std::int64_t rank_mod_p(const SparseMatrix& m, const PrimeField& field, const RankOptions& opts = {});

/// Rank of a dense row-major matrix over Z/pZ, p < 2^31, using the given row kernels.
/// Destroys the input.
std::int64_t dense_rank_mod_p(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                              std::uint32_t p, const kernels::KernelTable& k);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::int64_t rational_rank(const SparseMatrix& m);

struct RankCertificate {
  std::int64_t rank = 0;
  std::vector<std::uint64_t> primes_used;
  std::vector<std::int64_t> modular_ranks;  ///< parallel to primes_used
  bool agreement = true;
  bool exact_over_rationals = false;
};

/// rows*cols <= exact_threshold: exact rational rank (modular ranks are still computed
/// and must not exceed it). Otherwise the maximum modular rank, with agreement set when
/// all primes give the same value. Requires at least two primes.
RankCertificate certified_rank(const SparseMatrix& m, std::span<const std::uint64_t> primes,
                               std::int64_t exact_threshold, const RankOptions& opts = {});

}  // namespace syzlab
