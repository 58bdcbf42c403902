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

#include <array>

#include "doctest.h"
#include "oracle.hpp"
#include "syzlab/betti.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;

namespace {

std::int64_t kpq(int n, int b, int d, int p, int q, const EngineConfig& cfg = {}) {
  return kpq_dim(Parameters::make(n, b, d, p, q), cfg).dim;
}

}  // namespace

TEST_CASE("known cells") {
  CHECK(kpq(1, 0, 2, 1, 1) == 1);
  CHECK(kpq(2, 0, 2, 1, 1) == 6);
  CHECK(kpq(1, 0, 3, 2, 1) == 2);
  CHECK(kpq(2, 0, 3, 7, 2) == 1);
  for (int p = 0; p <= 3; ++p) CHECK(kpq(2, 0, 3, p, 2) == 0);
  CHECK(kpq(2, 0, 3, 0, 0) == 1);
}

TEST_CASE("analytic zeros") {
  const CellResult above = kpq_dim(Parameters::make(2, 0, 3, 2, 4), {});
  CHECK(above.analytic_zero);
  CHECK(above.dim == 0);
  CHECK(kpq_dim(Parameters::make(2, 0, 3, 10, 1), {}).analytic_zero);
  CHECK(kpq_dim(Parameters::make(2, 1, 3, 1, -1), {}).analytic_zero);
  CHECK_FALSE(kpq_dim(Parameters::make(2, 4, 3, 1, -1), {}).analytic_zero);
  CHECK_THROWS_AS(kpq_dim(Parameters::make(2, 0, 3, -1, 1), {}), DomainError);
}

TEST_CASE("engine agrees with the brute-force oracle on whole tables") {
  const int cases[][3] = {{1, 0, 2}, {1, 1, 3}, {1, 2, 2}, {2, 0, 2}, {2, 1, 2}, {3, 0, 1}, {1, 3, 2}};
  for (const auto& c : cases) {
    const int n = c[0], b = c[1], d = c[2];
    const BettiTable t = betti_table(n, b, d, std::nullopt, {});
    REQUIRE(t.failures.empty());
    for (const auto& [pq, cell] : t.cells) {
      if (oracle::mid_size(n, b, d, pq.first, pq.second) > 700) continue;
      CAPTURE(n); CAPTURE(b); CAPTURE(d); CAPTURE(pq.first); CAPTURE(pq.second);
      CHECK(cell.dim == oracle::koszul(n, b, d, pq.first, pq.second).dim());
      CHECK(cell.agreement);
    }
  }
}

TEST_CASE("rational normal curves follow the Hilbert series recursion") {
  for (int d = 2; d <= 6; ++d) {
    const BettiTable t = betti_table(1, 0, d, std::nullopt, {});
    for (const auto& [pq, cell] : t.cells) {
      const auto [p, q] = pq;
      std::int64_t want = 0;
      if (p == 0 && q == 0) want = 1;
      if (q == 1 && p >= 1) want = oracle::rnc_linear_strand(d, p);
      CAPTURE(d); CAPTURE(p); CAPTURE(q);
      CHECK(cell.dim == want);
      if (q == 1 && p >= 1 && p <= d - 1) CHECK(cell.dim == p * oracle::binom(d, p + 1));
    }
  }
}

TEST_CASE("configuration knobs do not change answers") {
  EngineConfig base;
  EngineConfig no_sym = base;
  no_sym.use_symmetry = false;
  EngineConfig exact = base;
  exact.mode = FieldMode::Exact;
  EngineConfig threaded = base;
  threaded.threads = 3;
  EngineConfig other_primes = base;
  other_primes.prime_seeds = {5, 6};
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 2; ++q) {
      const std::int64_t want = kpq(2, 1, 2, p, q, base);
      CHECK(kpq(2, 1, 2, p, q, no_sym) == want);
      CHECK(kpq(2, 1, 2, p, q, threaded) == want);
      CHECK(kpq(2, 1, 2, p, q, other_primes) == want);
      if (p <= 3) CHECK(kpq(2, 1, 2, p, q, exact) == want);
    }
  CHECK(kpq_dim(Parameters::make(2, 0, 2, 2, 1), exact).level == CertLevel::Exact);
}

TEST_CASE("certification level and primes") {
  EngineConfig cfg;
  cfg.exact_threshold = 0;
  const CellResult c = kpq_dim(Parameters::make(2, 0, 3, 3, 1), cfg);
  CHECK(c.level == CertLevel::TwoPrime);
  CHECK(c.agreement);
  CHECK(c.primes == cfg.primes());
  cfg.mode = FieldMode::OnePrime;
  CHECK(cfg.primes().size() == 1);
  CHECK(kpq_dim(Parameters::make(2, 0, 3, 3, 1), cfg).level == CertLevel::OnePrime);
  CHECK(parse_field_mode("two-prime") == FieldMode::TwoPrime);
  CHECK_THROWS_AS(parse_field_mode("three-prime"), DomainError);
}

TEST_CASE("Euler identity") {
  for (const auto& c : std::vector<std::array<int, 3>>{{1, 0, 3}, {1, 1, 4}, {2, 0, 2}, {2, 1, 2}, {1, 5, 2}}) {
    const BettiTable t = betti_table(c[0], c[1], c[2], std::nullopt, {});
    const EulerReport r = euler_check(t);
    CHECK(r.all_zero());
    CHECK_FALSE(r.residuals.empty());
  }
  CHECK(lowest_row(5, 2) == -2);
  CHECK(lowest_row(1, 2) == 0);
  CHECK(hilbert_numerator_coeff(1, 0, 2, 0) == 1);
  CHECK(hilbert_numerator_coeff(1, 0, 2, 2) == -1);
  const BettiTable partial = betti_table(1, 0, 3, std::pair{0, 1}, {});
  CHECK_THROWS_AS(euler_check(partial), IncompleteTable);
}

TEST_CASE("duality pairs cells of dual tables") {
  for (const auto& c : std::vector<std::array<int, 3>>{{1, 0, 3}, {1, 0, 4}, {1, 1, 4}, {2, 0, 3}}) {
    const DualityReport r = check_duality(c[0], c[1], c[2], std::nullopt, {});
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.b_dual == c[2] - c[0] - 1 - c[1]);
  }
  CHECK_THROWS_AS(check_duality(2, 1, 3, std::nullopt, {}), DomainError);
  const DualityReport windowed = check_duality(2, 0, 3, std::pair{0, 2}, {});
  CHECK(windowed.ok());
}
