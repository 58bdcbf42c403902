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
#include <stdexcept>
#include <string>

namespace syzlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Koszul block whose estimated footprint exceeds the configured cap.
class InfeasibleBlock : public Error {
 public:
  InfeasibleBlock(std::int64_t in_dim, std::int64_t mid_dim, std::int64_t out_dim,
                  std::uint64_t estimated_bytes, std::uint64_t cap_bytes);

  std::int64_t in_dim, mid_dim, out_dim;
  std::uint64_t estimated_bytes, cap_bytes;
};

class ChecksumError : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

/// Raised when representation-theoretic extraction produces an impossible value.
class NegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

}  // namespace syzlab
