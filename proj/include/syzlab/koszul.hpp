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
#include <optional>
#include <vector>

#include "syzlab/monomials.hpp"
#include "syzlab/sparse_matrix.hpp"

namespace syzlab {

/// Indices (n, b, d, p, q) of K_{p,q}(P^n, b; d) together with v = h0(O(d)) and r_d = v - 1.
struct Parameters {
  int n = 1;
  int b = 0;
  int d = 1;
  int p = 0;
  int q = 0;
  std::int64_t v = 0;
  std::int64_t r_d = 0;

  /// Fills v and r_d; throws DomainError unless n >= 1, d >= 1, b >= 0, p >= 0.
  static Parameters make(int n, int b, int d, int p, int q);
  void validate() const;

  int mid_degree() const { return q * d + b; }
  int weight_degree() const { return (p + q) * d + b; }
};

/// A strictly increasing set of indices into the degree-d basis, wedged together and
/// tensored with one monomial (index into the basis of the tensor degree).
struct WedgeTensor {
  std::vector<std::uint32_t> wedge;
  std::uint32_t tensor = 0;

  auto operator<=>(const WedgeTensor&) const = default;
  bool operator==(const WedgeTensor&) const = default;
};

struct Term {
  WedgeTensor element;
  std::int64_t coeff;
};

/// Monomial bases of k[x_0..x_n] for degrees 0..max_degree.
class MonomialTable {
 public:
  MonomialTable(int n, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return static_cast<int>(bases_.size()) - 1; }
  /// Empty basis for e < 0; throws DomainError above max_degree.
  const GradedPieceBasis& basis(int e) const;

 private:
  int n_;
  std::vector<GradedPieceBasis> bases_;
  GradedPieceBasis empty_;
};

/// Koszul differential of x in Lambda^k S^d ⊗ S^e:
///   m_{i1}^...^m_{ik} ⊗ g  ->  sum_j (-1)^{j-1} m_{i1}^..(omit i_j)..^m_{ik} ⊗ m_{ij} g.
/// Output lies in Lambda^{k-1} S^d ⊗ S^{e+d}, sorted by element.
/// Throws DomainError if the wedge is not strictly increasing or k == 0.
std::vector<Term> differential(const MonomialTable& table, int d, int e, const WedgeTensor& x);

/// Every weight whose middle block is nonempty, lexicographically decreasing.
std::vector<Weight> enumerate_weights(const Parameters& params);

/// The weakly decreasing members of enumerate_weights(params).
std::vector<Weight> dominant_weights(const Parameters& params);

/// Number of distinct permutations of w's entries.
std::int64_t orbit_size(const Weight& w);

/// Sorted decreasingly.
Weight dominant_representative(const Weight& w);

struct KoszulBlock {
  Weight weight;
  std::int64_t in_dim = 0;
  std::int64_t mid_dim = 0;
  std::int64_t out_dim = 0;
  SparseMatrix d_in;   ///< mid_dim x in_dim
  SparseMatrix d_out;  ///< out_dim x mid_dim
};

struct BlockOptions {
  std::uint64_t memory_cap_bytes = std::uint64_t{2} << 30;
};

/// Sizes of the three basis sets at one weight, without building matrices.
struct BlockShape {
  std::int64_t in_dim = 0;
  std::int64_t mid_dim = 0;
  std::int64_t out_dim = 0;
  std::uint64_t estimated_bytes = 0;
};

BlockShape block_shape(const Parameters& params, const Weight& w);

/// Restriction of the complex to weight w. Throws InfeasibleBlock if the
/// estimated footprint exceeds opts.memory_cap_bytes.
KoszulBlock build_block(const Parameters& params, const Weight& w, const BlockOptions& opts = {});

/// Middle-term basis of the block at w, in row order of d_in / column order of d_out.
std::vector<WedgeTensor> block_middle_basis(const Parameters& params, const Weight& w);

/// The unblocked complex, for cross-checking on tiny instances. Throws
/// InfeasibleBlock when the middle term exceeds max_mid_dim.
struct FullComplex {
  std::int64_t in_dim = 0;
  std::int64_t mid_dim = 0;
  std::int64_t out_dim = 0;
  SparseMatrix d_in;
  SparseMatrix d_out;
};
FullComplex build_full_complex(const Parameters& params, std::int64_t max_mid_dim = 20000);

}  // namespace syzlab
