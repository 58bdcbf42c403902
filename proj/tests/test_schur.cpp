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

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "syzlab/error.hpp"
#include "syzlab/schur.hpp"

using namespace syzlab;

TEST_CASE("partitions") {
  const auto ps = partitions_of(4, 3);
  CHECK(ps.size() == 4);
  CHECK(ps.front() == Partition({4, 0, 0}));
  CHECK(ps.back() == Partition({2, 1, 1}));
  CHECK(partitions_of(6, 6).size() == 11);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), DomainError);
  CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
  CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK(Partition({2, 1, 0}).length() == 2);
}

TEST_CASE("Kostka numbers agree with tableau enumeration") {
  CHECK(kostka(Partition({2, 1}), Weight{1, 1, 1}) == 2);
  CHECK(kostka(Partition({2, 2, 0}), Weight{1, 1, 2}) == 1);
  for (int total = 1; total <= 6; ++total)
    for (const Partition& lambda : partitions_of(total, 3))
      for (const Partition& mu : partitions_of(total, 3)) {
        std::vector<int> comp = mu.parts();
        std::reverse(comp.begin(), comp.end());
        CHECK(kostka(lambda, Weight(comp)) == oracle::kostka(lambda.parts(), comp));
        CHECK((kostka(lambda, Weight(mu.parts())) > 0) == dominates(lambda, mu));
      }
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(Partition({2, 2, 0}), 3) == 6);
  CHECK(weyl_dim(Partition({4}), 3) == 15);
  CHECK(weyl_dim(Partition({1, 0, 0}), 3) == 3);
  CHECK_THROWS_AS(weyl_dim(Partition({1, 1, 1, 1}), 3), DomainError);
  // sum over lambda of K_{lambda,(1^m)} * dim S_lambda(C^m) = m^m
  for (int m = 1; m <= 4; ++m) {
    BigInt total = 0;
    for (const Partition& l : partitions_of(m, static_cast<std::size_t>(m)))
      total += kostka(l, Weight(std::vector<int>(static_cast<std::size_t>(m), 1))) * weyl_dim(l, m);
    BigInt want = 1;
    for (int i = 0; i < m; ++i) want *= m;
    CHECK(total == want);
  }
}

TEST_CASE("decomposition of a known syzygy space") {
  EngineConfig cfg;
  const SchurMultiplicityTable t = schur_multiplicities(Parameters::make(2, 0, 2, 1, 1), cfg);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].first == Partition({2, 2, 0}));
  CHECK(t.entries[0].second == 1);
  CHECK(t.total_dim == 6);
  const SchurMultiplicityTable triv = schur_multiplicities(Parameters::make(2, 0, 2, 0, 0), cfg);
  REQUIRE(triv.entries.size() == 1);
  CHECK(triv.entries[0].first.size() == 0);
  CHECK(triv.total_dim == 1);
  const SchurMultiplicityTable cubic = schur_multiplicities(Parameters::make(1, 0, 3, 1, 1), cfg);
  CHECK(cubic.total_dim == 3);
}

TEST_CASE("decompositions satisfy the dimension identity") {
  EngineConfig cfg;
  const int cases[][5] = {{1, 0, 3, 1, 1}, {1, 0, 4, 2, 1}, {2, 0, 2, 2, 1}, {2, 1, 2, 1, 1}, {2, 0, 3, 2, 1}, {2, 0, 3, 7, 2}, {3, 0, 2, 2, 1}};
  for (const auto& c : cases) {
    const Parameters P = Parameters::make(c[0], c[1], c[2], c[3], c[4]);
    const SchurMultiplicityTable t = schur_multiplicities(P, cfg);
    CHECK(t.total_dim == kpq_dim(P, cfg).dim);
    for (const auto& [lambda, m] : t.entries) {
      CHECK(m > 0);
      CHECK(lambda.size() == P.weight_degree());
      CHECK(lambda.length() <= static_cast<std::size_t>(P.n + 1));
    }
  }
}

TEST_CASE("decomposition requires a certified field mode") {
  EngineConfig cfg;
  cfg.mode = FieldMode::OnePrime;
  CHECK_THROWS_AS(schur_multiplicities(Parameters::make(2, 0, 2, 1, 1), cfg), DomainError);
}

TEST_CASE("nonvanishing is stable once n >= p") {
  const StabilityReport r = stability_check(0, 2, 1, 1, {1, 2, 3}, {});
  CHECK(r.consistent);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].included);
  for (const auto& e : r.entries) CHECK(e.dim > 0);
}
