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
#include <string>
#include <utility>
#include <vector>

#include "syzlab/arith.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {

class ResultStore;

inline constexpr const char* kEngineVersion = "0.1.0";

enum class FieldMode { Exact, TwoPrime, OnePrime };

/// Ordered weakest first so std::min gives the level of a combination.
enum class CertLevel { OnePrime = 0, TwoPrime = 1, Exact = 2 };

const char* to_string(FieldMode m);
const char* to_string(CertLevel l);
FieldMode parse_field_mode(const std::string& s);
CertLevel parse_cert_level(const std::string& s);

struct EngineConfig {
  FieldMode mode = FieldMode::TwoPrime;
  std::vector<std::uint64_t> prime_seeds{1, 2};
  int prime_bits = 31;
  /// Blocks with rows*cols at most this are also ranked exactly over Q.
  std::int64_t exact_threshold = 2500;
  int threads = 1;
  /// Sum dominant weights times orbit size instead of visiting every weight.
  bool use_symmetry = true;
  BlockOptions block;
  RankOptions rank;
  ResultStore* store = nullptr;

  /// One prime per seed (only the first in OnePrime mode).
  std::vector<std::uint64_t> primes() const;
};

/// Cohomology of one weight block: mid_dim - rank(d_in) - rank(d_out).
struct BlockCohomology {
  Weight weight;
  std::int64_t in_dim = 0, mid_dim = 0, out_dim = 0;
  std::int64_t rank_in = 0, rank_out = 0;
  std::int64_t dim = 0;
  CertLevel level = CertLevel::Exact;
  bool agreement = true;
};

BlockCohomology block_cohomology(const Parameters& params, const Weight& w, const EngineConfig& cfg);

struct CellResult {
  std::int64_t dim = 0;
  CertLevel level = CertLevel::Exact;
  bool agreement = true;
  std::vector<std::uint64_t> primes;
  std::int64_t block_count = 0;
  std::int64_t max_block_dim = 0;
  double wall_time_ms = 0;
  bool analytic_zero = false;
  bool from_cache = false;
};

/// dim K_{p,q}(P^n, b; d). Analytic zeros (q > n+1, p >= v, q*d + b < 0) return
/// without matrix work. With cfg.store set, hits are served from and results written to it.
CellResult kpq_dim(const Parameters& params, const EngineConfig& cfg);

struct BettiTable {
  int n = 1, b = 0, d = 1;
  std::int64_t v = 0, r_d = 0;
  int p_lo = 0, p_hi = 0;  ///< computed column window, inclusive
  int q_lo = 0, q_hi = 0;  ///< rows; q_lo < 0 only when b >= d
  std::map<std::pair<int, int>, CellResult> cells;        ///< keyed (p, q)
  std::map<std::pair<int, int>, std::string> failures;    ///< infeasible cells

  bool computed(int p, int q) const { return cells.count({p, q}) != 0; }
  /// Computed dimension, or nullopt when the cell was not computed.
  std::optional<std::int64_t> dim(int p, int q) const;
  bool full_window() const { return p_lo == 0 && p_hi == r_d; }
  /// Lowest certification over the computed cells.
  CertLevel level() const;
};

/// Lowest weight row that can be nonzero: -floor(b/d).
int lowest_row(int b, int d);

/// Every cell p in the window (default [0, r_d]) and q in [lowest_row, n+1].
/// Infeasible cells land in `failures`; the table is still returned.
BettiTable betti_table(int n, int b, int d, std::optional<std::pair<int, int>> p_window,
                       const EngineConfig& cfg);

struct EulerReport {
  std::map<int, BigInt> residuals;  ///< total degree j = p + q -> residual
  bool all_zero() const;
};

/// Coefficient of t^j in H_R(t) (1 - t)^v with H_R(t) = sum_m C(md+b+n, n) t^m.
BigInt hilbert_numerator_coeff(int n, int b, int d, int j);

/// Residuals sum_{p+q=j} (-1)^p dim K_{p,q} - c_j. Throws IncompleteTable naming
/// missing cells unless the table covers p in [0, r_d] and every row.
EulerReport euler_check(const BettiTable& table);

struct DualityMismatch {
  int p = 0, q = 0;
  std::int64_t dim = 0;
  int p_dual = 0, q_dual = 0;
  std::int64_t dual_dim = 0;
};

struct DualityReport {
  int b_dual = 0;
  std::int64_t checked = 0;
  std::vector<DualityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares dim K_{p,q}(b) with dim K_{r_d-p-n, n-q}(d-n-1-b) over every cell computed
/// in both tables with 0 <= q <= n and r_d-p-n >= 0. Throws DomainError unless
/// d >= b+n+1 and `dual` is the table for b' = d-n-1-b.
DualityReport check_duality(const BettiTable& table, const BettiTable& dual);

/// Computes both tables (dual window mirrored from p_window) and compares them.
DualityReport check_duality(int n, int b, int d, std::optional<std::pair<int, int>> p_window,
                            const EngineConfig& cfg);

}  // namespace syzlab
