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
#include <optional>
#include <string>
#include <vector>

#include "syzlab/arith.hpp"
#include "syzlab/betti.hpp"

namespace syzlab {

enum class RangeSource {
  Effective,       ///< non-vanishing for 1 <= q <= n, proved once d >= b+n+1
  Secant,          ///< same lower end, weaker upper end; 2 <= q <= n, d >= b+q+1
  LinearStrand,    ///< q = 1, d >= b+2
  WeightZeroExact, ///< q = 0, iff statement for d >= b+1
  TopRowExact,     ///< q = n, iff statement for d >= b+n+1
  BottomRowExact,  ///< q = n+1, always empty for b >= 0
  GreenLinear,     ///< K_{p,q} = 0 for q >= 2, 1 <= p <= d when b = 0
  PlaneQuadratic,  ///< K_{p,2}(P^2; d) != 0 for 3d-2 <= p <= r_d-2
};

/// Whether the hypothesis behind a range is met by (n, b, d).
enum class Regime { Proved, Conjectured, Outside };

const char* to_string(RangeSource s);
const char* to_string(Regime r);

/// Inclusive [lo, hi]; empty when lo > hi.
struct PredictedRange {
  RangeSource source = RangeSource::Effective;
  int q = 0;
  BigInt lo, hi;
  std::string validity;
  Regime regime = Regime::Outside;
  /// True for iff statements: nonzero exactly on the range.
  bool exact = false;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t p) const { return lo <= p && p <= hi; }
};

/// [C(d+q,q) - C(d-b-1,q) - q,  C(d+n,n) - C(d+n-q,n-q) + C(n+b,n-q) - q - 1].
/// Requires 1 <= q <= n and b >= 0.
PredictedRange effective_range(int n, int b, int d, int q);

/// Lower end as effective_range; upper end C(d+n-1,n) + C(d+q-1,q-1) - C(d-b-2,q-1) - q.
/// Requires 2 <= q <= n, b >= 0, d >= b+q+1.
PredictedRange secant_range(int n, int b, int d, int q);

/// [b+1, C(d+n-1,n) - 1] for q = 1. Requires b >= 0, d >= b+2.
PredictedRange linear_strand_range(int n, int b, int d);

/// q = 0: [0, C(b+n,n) - 1]. Requires d >= b+1.
PredictedRange kp0_exact(int n, int b, int d);
/// q = n: [C(d+n,n) - C(d-b-1,n) - n, C(d+n,n) - n - 1]. Requires d >= b+n+1.
PredictedRange kpn_exact(int n, int b, int d);
/// q = n+1: [r_d - n - r(K-B), r_d - n] with r(K-B) = -1 on P^n, hence empty.
PredictedRange kpn1_exact(int n, int b, int d);

/// K_{p,2}(P^2, 0; d): [3d-2, r_d-2]. Requires d >= 3.
PredictedRange plane_quadratic_range(int d);

/// True when Green's linearity forces K_{p,q}(P^n, 0; d) = 0: 1 <= p <= d and q >= 2.
bool green_zero_oracle(int n, int d, int p, int q);

struct DualIndex {
  std::int64_t p = 0;
  int q = 0;
  int b = 0;
  bool operator==(const DualIndex&) const = default;
};

/// (r_d - p - n, n - q, d - n - 1 - b). Involutive. Requires 0 <= q <= n.
DualIndex duality_pair(int n, int b, int d, std::int64_t p, int q);

enum class Verdict { Pass, Fail, Skipped };
const char* to_string(Verdict v);

struct RangeCheck {
  PredictedRange range;
  /// Every computed cell inside the range is nonzero.
  Verdict containment = Verdict::Skipped;
  /// For exact ranges: the computed nonzero set equals the range within the window.
  Verdict exactness = Verdict::Skipped;
  /// Computed nonzero cells outside the range (optimality-gap candidates).
  std::vector<int> outside;
  /// Cells inside the range that computed as zero.
  std::vector<int> zeros_inside;
};

struct RowComparison {
  int q = 0;
  std::vector<int> nonzero;
  std::vector<RangeCheck> checks;
  std::vector<int> green_violations;
};

struct CompareReport {
  int n = 0, b = 0, d = 0;
  std::vector<RowComparison> rows;
  /// No failing check in a proved regime and no Green violation.
  bool ok = true;
};

CompareReport compare_report(const BettiTable& table);

struct ExploreRow {
  int q = 0;
  int d = 0;
  std::optional<int> min_nonzero_p;  ///< nullopt when no nonzero cell up to p_max
  int p_max = 0;
};

/// Smallest p with K_{p,q}(P^n, b; d) != 0, for each q and d, scanning p up to
/// min(p_max, r_d). No verdicts: raw data for fitting growth in d.
std::vector<ExploreRow> explore_min_nonzero(int n, int b, const std::vector<int>& ds,
                                            const std::vector<int>& qs, int p_max,
                                            const EngineConfig& cfg);

}  // namespace syzlab
