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
#include "syzlab/kernels.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/sparse_matrix.hpp"

using namespace syzlab;

namespace {

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int range) {
  std::vector<Triplet> t;
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> val(-range, range);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (u(rng) < density) t.push_back({r, c, val(rng)});
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

/// Rank-deficient by construction: product of rows x k and k x cols factors.
SparseMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  SparseMatrix a = random_sparse(rng, rows, k, 0.5, 3), b = random_sparse(rng, k, cols, 0.5, 3);
  return a.multiply(b);
}

}  // namespace

TEST_CASE("sparse matrix construction is canonical") {
  SparseMatrix m = SparseMatrix::from_triplets(2, 3, {{1, 2, 4}, {0, 0, 1}, {1, 2, -4}, {0, 1, 2}, {0, 1, 3}});
  CHECK(m.nnz() == 2);
  CHECK(m.to_dense() == std::vector<std::vector<std::int64_t>>{{1, 5, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1}}), DomainError);
  CHECK(m.transpose().transpose() == m);
  const SparseMatrix a = SparseMatrix::from_dense({{1, 2}, {3, 4}});
  const SparseMatrix b = SparseMatrix::from_dense({{0, 1}, {1, 0}});
  CHECK(a.multiply(b).to_dense() == std::vector<std::vector<std::int64_t>>{{2, 1}, {4, 3}});
  CHECK_THROWS_AS(a.multiply(SparseMatrix(3, 1)), DomainError);
}

TEST_CASE("kernel variants agree with the scalar reference") {
  const auto kernels = kernels::available_kernels();
  REQUIRE(!kernels.empty());
  if (kernels::avx2_kernels() == nullptr) MESSAGE("AVX2 kernels unavailable; only the scalar path is exercised");
  const kernels::KernelTable& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 65521u, static_cast<std::uint32_t>(random_prime(31, 1)), 2147483647u}) {
    for (std::size_t len : {0u, 1u, 3u, 7u, 8u, 9u, 16u, 31u, 67u, 200u}) {
      std::vector<std::uint32_t> src(len), dst(len);
      for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % p);
      const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
      const std::uint32_t cs = kernels::shoup(c, p);
      for (const kernels::KernelTable* k : kernels) {
        auto want = dst, got = dst;
        ref.submul(want.data(), src.data(), len, c, cs, p);
        k->submul(got.data(), src.data(), len, c, cs, p);
        CHECK_MESSAGE(got == want, k->name);
        for (std::size_t i = 0; i < len; ++i)
          CHECK(want[i] == static_cast<std::uint32_t>((dst[i] + p - static_cast<std::uint64_t>(c) * src[i] % p) % p));
        auto ws = dst, gs = dst;
        ref.scale(ws.data(), len, c, cs, p);
        k->scale(gs.data(), len, c, cs, p);
        CHECK(gs == ws);
        for (std::size_t i = 0; i < len; ++i)
          CHECK(ws[i] == static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p));
      }
    }
  }
}

TEST_CASE("dense rank is identical across kernel variants") {
  std::mt19937_64 rng(5);
  const std::uint32_t p = static_cast<std::uint32_t>(random_prime(31, 2));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40, k = rng() % 12;
    const SparseMatrix m = low_rank(rng, rows, cols, k + 1);
    const auto dense = m.to_dense();
    std::vector<std::int64_t> ranks;
    for (const kernels::KernelTable* kt : kernels::available_kernels()) {
      std::vector<std::uint32_t> a(rows * cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = static_cast<std::uint32_t>(((dense[r][c] % p) + p) % p);
      ranks.push_back(dense_rank_mod_p(a, rows, cols, p, *kt));
    }
    for (auto r : ranks) CHECK(r == oracle::rank_mod(dense, p));
  }
}

TEST_CASE("sparse and dense elimination match the oracle") {
  std::mt19937_64 rng(9);
  const PrimeField f(random_prime(31, 1));
  RankOptions sparse_only;
  sparse_only.dense_switch_density = 2.0;
  RankOptions dense_now;
  dense_now.dense_switch_density = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 50, cols = 1 + rng() % 50;
    const SparseMatrix m = trial % 2 ? random_sparse(rng, rows, cols, 0.08, 2) : low_rank(rng, rows, cols, 1 + rng() % 10);
    const std::int64_t want = oracle::rank_mod(m.to_dense(), static_cast<std::int64_t>(f.modulus()));
    CHECK(rank_mod_p(m, f) == want);
    CHECK(rank_mod_p(m, f, sparse_only) == want);
    CHECK(rank_mod_p(m, f, dense_now) == want);
    CHECK(rational_rank(m) >= want);
  }
}

TEST_CASE("rank over the rationals versus a small prime") {
  const SparseMatrix m = SparseMatrix::from_dense({{7, 0}, {0, 1}});
  CHECK(rational_rank(m) == 2);
  CHECK(rank_mod_p(m, PrimeField(7)) == 1);
  CHECK(rank_mod_p(SparseMatrix(0, 5), PrimeField(7)) == 0);
  CHECK(rational_rank(SparseMatrix::from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
}

TEST_CASE("certified rank") {
  std::mt19937_64 rng(3);
  const std::vector<std::uint64_t> primes{random_prime(31, 1), random_prime(31, 2)};
  const SparseMatrix m = low_rank(rng, 20, 25, 6);
  const RankCertificate exact = certified_rank(m, primes, 10000);
  CHECK(exact.exact_over_rationals);
  CHECK(exact.agreement);
  CHECK(exact.rank == rational_rank(m));
  CHECK(exact.modular_ranks.size() == 2);
  const RankCertificate modular = certified_rank(m, primes, 0);
  CHECK_FALSE(modular.exact_over_rationals);
  CHECK(modular.rank == exact.rank);
  const std::vector<std::uint64_t> clash{7, random_prime(31, 1)};
  const RankCertificate dis = certified_rank(SparseMatrix::from_dense({{7, 0}, {0, 1}}), clash, 0);
  CHECK_FALSE(dis.agreement);
  CHECK(dis.rank == 2);
  CHECK_THROWS_AS(certified_rank(m, std::vector<std::uint64_t>{primes[0]}, 0), DomainError);
}
