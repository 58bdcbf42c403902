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

#include <boost/multiprecision/cpp_int.hpp>

namespace syzlab {

using BigInt = boost::multiprecision::cpp_int;

/// C(m, k) for 0 <= k <= m, and 0 otherwise (including every negative m).
/// This is not the generalized binomial: C(-1, 2) is 0 here, which keeps
/// closed-form range endpoints such as C(d-b-1, q) vanishing when d-b-1 < q.
BigInt binom_safe(std::int64_t m, std::int64_t k);

/// binom_safe narrowed to int64; throws DomainError on overflow.
std::int64_t binom_i64(std::int64_t m, std::int64_t k);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A prime with exactly `bits` bits (top bit set), a pure function of seed.
/// Requires 20 <= bits <= 62.
std::uint64_t random_prime(int bits, std::uint64_t seed);

/// Scalars of Z/pZ kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

}  // namespace syzlab
