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

#include "syzlab/arith.hpp"

#include <limits>
#include <random>
#include <string>

#include "syzlab/error.hpp"

namespace syzlab {

InfeasibleBlock::InfeasibleBlock(std::int64_t in, std::int64_t mid, std::int64_t out,
                                 std::uint64_t est, std::uint64_t cap)
    : Error("infeasible block: dims (in=" + std::to_string(in) + ", mid=" + std::to_string(mid) +
            ", out=" + std::to_string(out) + "), estimated " + std::to_string(est) +
            " bytes exceeds cap " + std::to_string(cap)),
      in_dim(in), mid_dim(mid), out_dim(out), estimated_bytes(est), cap_bytes(cap) {}

BigInt binom_safe(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || m < k) return 0;
  if (k > m - k) k = m - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

std::int64_t binom_i64(std::int64_t m, std::int64_t k) {
  BigInt r = binom_safe(m, k);
  if (r > std::numeric_limits<std::int64_t>::max())
    throw DomainError("binomial C(" + std::to_string(m) + "," + std::to_string(k) +
                      ") overflows int64");
  return static_cast<std::int64_t>(r);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(int bits, std::uint64_t seed) {
  if (bits < 20 || bits > 62)
    throw DomainError("random_prime: bits must lie in [20, 62], got " + std::to_string(bits));
  // mt19937_64 output is fixed by the standard; distributions are not, so mask raw draws.
  std::mt19937_64 gen(seed);
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  const std::uint64_t mask = top - 1;
  for (;;) {
    std::uint64_t c = top | (gen() & mask) | 1;
    if (is_prime(c)) return c;
  }
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (std::uint64_t{1} << 62) || !is_prime(modulus))
    throw DomainError("PrimeField: modulus " + std::to_string(modulus) +
                      " is not a prime below 2^62");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("PrimeField::inv: zero has no inverse");
  return powmod(a, p_ - 2, p_);
}

}  // namespace syzlab
