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
#include <map>
#include <utility>
#include <vector>

#include "syzlab/arith.hpp"
#include "syzlab/betti.hpp"
#include "syzlab/koszul.hpp"

namespace syzlab {

/// Weakly decreasing, non-negative parts; trailing zeros allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;             ///< |lambda|
  std::size_t length() const;   ///< number of nonzero parts
  /// Copy padded with zeros (or trimmed of zeros) to exactly m parts.
  Partition padded(std::size_t m) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of total into at most `parts` parts, each padded to `parts` entries,
/// in decreasing lexicographic order (a linear extension of dominance).
std::vector<Partition> partitions_of(int total, std::size_t parts);

/// lambda dominates mu (prefix sums of lambda are >= those of mu); same size assumed.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda and content mu. Throws DomainError
/// if |lambda| != |mu|.
std::int64_t kostka(const Partition& lambda, const Weight& mu);

/// dim S_lambda(k^m) = prod_{i<j} (l_i - l_j + j - i) / (j - i). Throws DomainError
/// when lambda has more than m nonzero parts.
BigInt weyl_dim(const Partition& lambda, int m);

/// c_mu for each dominant weight mu of (p+q)d+b into n+1 parts (zero entries included).
/// Refuses one-prime configurations with DomainError.
std::map<Weight, std::int64_t> weight_space_dims(const Parameters& params, const EngineConfig& cfg);

struct SchurMultiplicityTable {
  Parameters params;
  std::vector<std::pair<Partition, std::int64_t>> entries;  ///< nonzero M_lambda, dominance-descending
  std::map<Weight, std::int64_t> weight_dims;
  std::int64_t total_dim = 0;  ///< sum_lambda M_lambda * weyl_dim(lambda, n+1)
};

/// Solves c_mu = sum_lambda M_lambda K_{lambda mu} from the top of the dominance order.
/// Throws NegativeMultiplicity if any M_lambda < 0, and Error if the dimension identity
/// or the permutation symmetry of c_mu fails.
SchurMultiplicityTable schur_multiplicities(const Parameters& params, const EngineConfig& cfg);

struct StabilityEntry {
  int n = 0;
  std::int64_t dim = 0;
  bool included = false;  ///< n >= p
};

struct StabilityReport {
  std::vector<StabilityEntry> entries;
  bool consistent = true;
};

/// Checks that K_{p,q}(P^n, b; d) vanishes for all or for none of the n in n_list with n >= p.
StabilityReport stability_check(int b, int d, int p, int q, const std::vector<int>& n_list,
                                const EngineConfig& cfg);

}  // namespace syzlab
