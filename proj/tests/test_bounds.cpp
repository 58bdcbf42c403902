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

#include "doctest.h"
#include "oracle.hpp"
#include "syzlab/bounds.hpp"

using namespace syzlab;

TEST_CASE("effective range in closed form") {
  for (int d = 3; d <= 40; ++d) {
    const PredictedRange r = effective_range(2, 0, d, 2);
    CHECK(r.lo == 3 * d - 2);
    CHECK(r.hi == oracle::binom(d + 2, 2) - 1 - 2);
  }
  const PredictedRange r = effective_range(2, 0, 5, 2);
  CHECK(r.lo == 13);
  CHECK(r.hi == 18);
  CHECK(r.regime == Regime::Proved);
  CHECK(effective_range(2, 0, 3, 2).lo == 7);
  CHECK(effective_range(2, 0, 3, 2).hi == 7);
  CHECK(effective_range(3, 2, 4, 1).regime != Regime::Proved);
}

TEST_CASE("top row of the effective range is exact") {
  for (int n = 1; n <= 4; ++n)
    for (int b = 0; b <= 3; ++b)
      for (int d = b + n + 1; d <= 30; ++d) {
        const PredictedRange e = effective_range(n, b, d, n), k = kpn_exact(n, b, d);
        CAPTURE(n); CAPTURE(b); CAPTURE(d);
        CHECK(e.lo == k.lo);
        CHECK(e.hi == k.hi);
      }
  CHECK(kpn_exact(2, 0, 3).lo == 7);
  CHECK(kpn_exact(2, 0, 3).hi == 7);
}

TEST_CASE("other ranges") {
  CHECK(secant_range(3, 0, 4, 2).lo == 10);
  const PredictedRange ls = linear_strand_range(2, 0, 3);
  CHECK(ls.lo == 1);
  CHECK(ls.hi == 5);
  const PredictedRange k0 = kp0_exact(2, 1, 3);
  CHECK(k0.lo == 0);
  CHECK(k0.hi == 2);
  CHECK(kp0_exact(2, 1, 3).exact);
  CHECK(kpn1_exact(2, 0, 3).empty());
  CHECK(plane_quadratic_range(3).lo == 7);
  CHECK(plane_quadratic_range(3).hi == 7);
  CHECK(plane_quadratic_range(5).lo == 13);
}

TEST_CASE("Green vanishing oracle") {
  CHECK(green_zero_oracle(2, 3, 2, 2));
  CHECK(green_zero_oracle(2, 3, 3, 2));
  CHECK_FALSE(green_zero_oracle(2, 3, 4, 2));
  CHECK_FALSE(green_zero_oracle(2, 3, 2, 1));
  CHECK_FALSE(green_zero_oracle(2, 3, 0, 2));
}

TEST_CASE("duality index is an involution") {
  for (int n = 1; n <= 3; ++n)
    for (int d = n + 1; d <= 6; ++d)
      for (int b = 0; b + n + 1 <= d; ++b)
        for (int q = 0; q <= n; ++q)
          for (int p = 0; p <= 10; ++p) {
            const DualIndex x = duality_pair(n, b, d, p, q);
            CHECK(x.b == d - n - 1 - b);
            CHECK(x.q == n - q);
            const DualIndex back = duality_pair(n, x.b, d, x.p, x.q);
            CHECK(back == DualIndex{p, q, b});
          }
}

TEST_CASE("computed tables sit inside the predicted ranges") {
  for (const auto& [n, b, d] : std::vector<std::tuple<int, int, int>>{{1, 0, 3}, {2, 0, 3}, {1, 1, 4}, {2, 1, 2}}) {
    const BettiTable t = betti_table(n, b, d, std::nullopt, {});
    const CompareReport r = compare_report(t);
    CAPTURE(n); CAPTURE(b); CAPTURE(d);
    CHECK(r.ok);
    for (const RowComparison& row : r.rows) CHECK(row.green_violations.empty());
  }
  // A fabricated cell inside the Green vanishing range must be reported.
  BettiTable t = betti_table(2, 0, 3, std::nullopt, {});
  t.cells[{2, 2}].dim = 5;
  CHECK_FALSE(compare_report(t).ok);
}
