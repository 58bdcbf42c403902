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

#include "syzlab/bounds.hpp"

#include <algorithm>

#include "syzlab/error.hpp"

namespace syzlab {

const char* to_string(RangeSource s) {
  switch (s) {
    case RangeSource::Effective: return "effective";
    case RangeSource::Secant: return "secant";
    case RangeSource::LinearStrand: return "linear-strand";
    case RangeSource::WeightZeroExact: return "kp0-exact";
    case RangeSource::TopRowExact: return "kpn-exact";
    case RangeSource::BottomRowExact: return "kpn1-exact";
    case RangeSource::GreenLinear: return "green-linear";
    case RangeSource::PlaneQuadratic: return "plane-quadratic";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Proved: return "proved";
    case Regime::Conjectured: return "conjectured";
    case Regime::Outside: return "outside";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

BigInt effective_lo(int b, int d, int q) { return binom_safe(d + q, q) - binom_safe(d - b - 1, q) - q; }

}  // namespace

PredictedRange effective_range(int n, int b, int d, int q) {
  require(n >= 1 && d >= 1, "effective_range: need n >= 1, d >= 1");
  require(1 <= q && q <= n, "effective_range: need 1 <= q <= n");
  require(b >= 0, "effective_range: need b >= 0");
  PredictedRange r;
  r.source = RangeSource::Effective;
  r.q = q;
  r.lo = effective_lo(b, d, q);
  r.hi = binom_safe(d + n, n) - binom_safe(d + n - q, n - q) + binom_safe(n + b, n - q) - q - 1;
  r.validity = "d >= b+n+1 (expected from d >= b+q+1)";
  r.regime = d >= b + n + 1 ? Regime::Proved : d >= b + q + 1 ? Regime::Conjectured : Regime::Outside;
  return r;
}

PredictedRange secant_range(int n, int b, int d, int q) {
  require(n >= 1, "secant_range: need n >= 1");
  require(2 <= q && q <= n, "secant_range: need 2 <= q <= n");
  require(b >= 0 && d >= b + q + 1, "secant_range: need b >= 0 and d >= b+q+1");
  PredictedRange r;
  r.source = RangeSource::Secant;
  r.q = q;
  r.lo = effective_lo(b, d, q);
  r.hi = binom_safe(d + n - 1, n) + binom_safe(d + q - 1, q - 1) - binom_safe(d - b - 2, q - 1) - q;
  r.validity = "2 <= q <= n, d >= b+q+1";
  r.regime = Regime::Proved;
  return r;
}

PredictedRange linear_strand_range(int n, int b, int d) {
  require(n >= 1, "linear_strand_range: need n >= 1");
  require(b >= 0 && d >= b + 2, "linear_strand_range: need b >= 0 and d >= b+2");
  PredictedRange r;
  r.source = RangeSource::LinearStrand;
  r.q = 1;
  r.lo = b + 1;
  r.hi = binom_safe(d + n - 1, n) - 1;
  r.validity = "d >= b+2";
  r.regime = Regime::Proved;
  return r;
}

PredictedRange kp0_exact(int n, int b, int d) {
  require(n >= 1 && b >= 0, "kp0_exact: need n >= 1, b >= 0");
  require(d >= b + 1, "kp0_exact: need d >= b+1");
  PredictedRange r;
  r.source = RangeSource::WeightZeroExact;
  r.q = 0;
  r.lo = 0;
  r.hi = binom_safe(b + n, n) - 1;
  r.validity = "d >= b+1";
  r.regime = Regime::Proved;
  r.exact = true;
  return r;
}

PredictedRange kpn_exact(int n, int b, int d) {
  require(n >= 1 && b >= 0, "kpn_exact: need n >= 1, b >= 0");
  require(d >= b + n + 1, "kpn_exact: need d >= b+n+1");
  PredictedRange r;
  r.source = RangeSource::TopRowExact;
  r.q = n;
  r.lo = binom_safe(d + n, n) - binom_safe(d - b - 1, n) - n;
  r.hi = binom_safe(d + n, n) - n - 1;
  r.validity = "d >= b+n+1";
  r.regime = Regime::Proved;
  r.exact = true;
  return r;
}

PredictedRange kpn1_exact(int n, int b, int d) {
  require(n >= 1 && b >= 0 && d >= 1, "kpn1_exact: need n >= 1, b >= 0, d >= 1");
  const BigInt r_d = binom_safe(d + n, n) - 1;
  // r(K - B) = h0(O(-n-1-b)) - 1 = -1.
  const BigInt r_dual = binom_safe(-n - 1 - b + n, n) - 1;
  PredictedRange r;
  r.source = RangeSource::BottomRowExact;
  r.q = n + 1;
  r.lo = r_d - n - r_dual;
  r.hi = r_d - n;
  r.validity = "d >= b+n+1";
  r.regime = d >= b + n + 1 ? Regime::Proved : Regime::Outside;
  r.exact = true;
  return r;
}

PredictedRange plane_quadratic_range(int d) {
  require(d >= 3, "plane_quadratic_range: need d >= 3");
  PredictedRange r;
  r.source = RangeSource::PlaneQuadratic;
  r.q = 2;
  r.lo = 3 * d - 2;
  r.hi = binom_safe(d + 2, 2) - 1 - 2;
  r.validity = "n = 2, b = 0, d >= 3";
  r.regime = Regime::Proved;
  return r;
}

bool green_zero_oracle(int /*n*/, int d, int p, int q) { return 1 <= p && p <= d && q >= 2; }

DualIndex duality_pair(int n, int b, int d, std::int64_t p, int q) {
  require(0 <= q && q <= n, "duality_pair: need 0 <= q <= n");
  const std::int64_t r_d = binom_i64(d + n, n) - 1;
  return {r_d - p - n, n - q, d - n - 1 - b};
}

namespace {

RangeCheck check_range(const BettiTable& t, int q, const PredictedRange& range) {
  RangeCheck c;
  c.range = range;
  std::vector<int> nonzero;
  bool any_in_window = false;
  for (int p = t.p_lo; p <= t.p_hi; ++p) {
    auto x = t.dim(p, q);
    if (!x) continue;
    const bool inside = range.contains(p);
    if (inside) any_in_window = true;
    if (*x > 0 && !inside) c.outside.push_back(p);
    if (*x == 0 && inside) c.zeros_inside.push_back(p);
  }
  if (range.regime == Regime::Outside) return c;
  if (range.empty())
    c.containment = Verdict::Pass;
  else if (any_in_window)
    c.containment = c.zeros_inside.empty() ? Verdict::Pass : Verdict::Fail;
  if (range.exact)
    c.exactness = (c.zeros_inside.empty() && c.outside.empty()) ? Verdict::Pass : Verdict::Fail;
  return c;
}

}  // namespace

CompareReport compare_report(const BettiTable& t) {
  CompareReport rep;
  rep.n = t.n;
  rep.b = t.b;
  rep.d = t.d;
  const int n = t.n, b = t.b, d = t.d;
  for (int q = std::max(0, t.q_lo); q <= n + 1; ++q) {
    RowComparison row;
    row.q = q;
    for (int p = t.p_lo; p <= t.p_hi; ++p) {
      auto x = t.dim(p, q);
      if (x && *x > 0) {
        row.nonzero.push_back(p);
        if (b == 0 && green_zero_oracle(n, d, p, q)) row.green_violations.push_back(p);
      }
    }
    std::vector<PredictedRange> ranges;
    if (q == 0 && d >= b + 1) ranges.push_back(kp0_exact(n, b, d));
    if (1 <= q && q <= n) ranges.push_back(effective_range(n, b, d, q));
    if (q == 1 && d >= b + 2) ranges.push_back(linear_strand_range(n, b, d));
    if (2 <= q && q <= n && d >= b + q + 1) ranges.push_back(secant_range(n, b, d, q));
    if (q == n && d >= b + n + 1) ranges.push_back(kpn_exact(n, b, d));
    if (q == n + 1) ranges.push_back(kpn1_exact(n, b, d));
    if (n == 2 && b == 0 && q == 2 && d >= 3) ranges.push_back(plane_quadratic_range(d));
    for (const PredictedRange& r : ranges) {
      RangeCheck c = check_range(t, q, r);
      if (r.regime == Regime::Proved &&
          (c.containment == Verdict::Fail || c.exactness == Verdict::Fail))
        rep.ok = false;
      row.checks.push_back(std::move(c));
    }
    if (!row.green_violations.empty()) rep.ok = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<ExploreRow> explore_min_nonzero(int n, int b, const std::vector<int>& ds,
                                            const std::vector<int>& qs, int p_max,
                                            const EngineConfig& cfg) {
  std::vector<ExploreRow> out;
  for (int q : qs)
    for (int d : ds) {
      const Parameters base = Parameters::make(n, b, d, 0, q);
      ExploreRow row;
      row.q = q;
      row.d = d;
      row.p_max = static_cast<int>(std::min<std::int64_t>(p_max, base.r_d));
      for (int p = 0; p <= row.p_max; ++p) {
        if (kpq_dim(Parameters::make(n, b, d, p, q), cfg).dim > 0) {
          row.min_nonzero_p = p;
          break;
        }
      }
      out.push_back(row);
    }
  return out;
}

}  // namespace syzlab
