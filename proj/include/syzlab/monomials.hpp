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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace syzlab {

/// A monomial of Sym U in n+1 variables, stored by its exponents.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  explicit ExponentVector(std::vector<int> exps);
  ExponentVector(std::initializer_list<int> exps) : ExponentVector(std::vector<int>(exps)) {}

  std::size_t size() const { return e_.size(); }
  int degree() const;
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  std::span<const int> exponents() const { return e_; }
  const std::vector<int>& vec() const { return e_; }

  /// "x0^2*x1", or "1" for the empty monomial. Variables are x,y,z,w for n <= 3.
  std::string to_string() const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<int> e_;
};

/// Total exponent vector of a basis tensor; the grading preserved by the differential.
using Weight = ExponentVector;

/// Componentwise sum; throws DomainError on length mismatch.
ExponentVector multiply(const ExponentVector& a, const ExponentVector& b);

/// Basis of the degree-e piece of k[x_0..x_n], ordered lexicographically with the
/// largest first exponent first.
class GradedPieceBasis {
 public:
  GradedPieceBasis(int n, int e);

  int n() const { return n_; }
  int degree() const { return e_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const ExponentVector& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<ExponentVector>& elements() const { return elems_; }

  /// Position of m in the basis, or -1 if m is not a degree-e monomial in n+1 variables.
  std::ptrdiff_t index_of(const ExponentVector& m) const;

  /// Exponents packed row-major, size() * (n+1) ints.
  const std::vector<int>& flat() const { return flat_; }

 private:
  int n_;
  int e_;
  std::vector<ExponentVector> elems_;
  std::vector<int> flat_;
};

/// Empty when e < 0; requires n >= 1.
GradedPieceBasis enumerate_basis(int n, int e);

}  // namespace syzlab
