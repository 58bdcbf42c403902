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
#include "syzlab/arith.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;

TEST_CASE("binomials") {
  CHECK(binom_safe(5, 2) == 10);
  CHECK(binom_safe(0, 0) == 1);
  CHECK(binom_safe(3, 5) == 0);
  CHECK(binom_safe(-1, 0) == 0);
  CHECK(binom_safe(4, -1) == 0);
  CHECK(binom_safe(100, 50).str() == "100891344545564193334812497256");
  for (int m = 0; m < 30; ++m)
    for (int k = 0; k <= m; ++k) CHECK(binom_safe(m, k) == oracle::binom(m, k));
  CHECK(binom_i64(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binom_i64(200, 100), Error);
}

TEST_CASE("primality agrees with trial division") {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial(n));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
}

TEST_CASE("random primes are deterministic and sized") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const std::uint64_t p = random_prime(31, seed);
    CHECK(is_prime(p));
    CHECK(p >= (std::uint64_t{1} << 30));
    CHECK(p < (std::uint64_t{1} << 31));
    CHECK(p == random_prime(31, seed));
  }
  CHECK(random_prime(31, 1) != random_prime(31, 2));
  CHECK_THROWS_AS(random_prime(19, 1), DomainError);
  CHECK_THROWS_AS(random_prime(63, 1), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(random_prime(31, 3));
  const std::uint64_t p = f.modulus();
  CHECK(f.reduce(-1) == p - 1);
  CHECK(f.reduce(static_cast<std::int64_t>(p) * 3 + 5) == 5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng() % (p - 1) + 1, b = rng() % p;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, p - 1) == 1);
    CHECK(f.add(f.sub(b, a), a) == b);
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK_THROWS_AS(PrimeField(15), DomainError);
}
