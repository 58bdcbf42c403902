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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "syzlab/betti.hpp"
#include "syzlab/bounds.hpp"
#include "syzlab/cycles.hpp"
#include "syzlab/schur.hpp"

namespace syzlab {

inline constexpr const char* kSchema = "syzygy-lab/1";

/// Everything that determines a run's output. Embedded in every emitted artifact.
struct RunConfig {
  std::string command;
  int n = 1, b = 0, d = 1;
  std::optional<int> p, q;
  std::optional<std::pair<int, int>> p_window;
  FieldMode mode = FieldMode::TwoPrime;
  std::vector<std::uint64_t> prime_seeds{1, 2};
  int threads = 1;
  std::uint64_t memory_cap = std::uint64_t{2} << 30;
  std::int64_t exact_threshold = 2500;
  std::string format = "json";
  std::string cache_dir;

  EngineConfig engine() const;
  nlohmann::ordered_json to_json() const;
};

/// {"schema", "engine_version", "config", "result"}.
nlohmann::ordered_json envelope(const RunConfig& cfg, nlohmann::ordered_json result);

/// Integer when it fits in int64, decimal string otherwise.
nlohmann::ordered_json bigint_json(const BigInt& x);

nlohmann::ordered_json to_json(const CellResult& c);
/// Wall times are omitted so output depends only on the configuration.
nlohmann::ordered_json to_json(const BettiTable& t);
nlohmann::ordered_json to_json(const EulerReport& r);
nlohmann::ordered_json to_json(const DualityReport& r);
nlohmann::ordered_json to_json(const PredictedRange& r);
nlohmann::ordered_json to_json(const CompareReport& r);
nlohmann::ordered_json to_json(const SchurMultiplicityTable& t);
nlohmann::ordered_json to_json(const StabilityReport& r);
nlohmann::ordered_json to_json(const KoszulChain& c);

/// Macaulay2-style display: a "total:" row then rows q, columns p, "." for zero and
/// "?" for cells not computed. Trailing all-zero columns are trimmed.
std::string to_m2(const BettiTable& t);

/// Normalized diagram: one band per row q, horizontal position p / r_d in [0, 1],
/// gray level log(1 + dim) scaled to the table maximum. Throws IncompleteTable if the
/// table does not cover its full p range.
std::string render_normalized_diagram(const BettiTable& t, int width_px);

/// Leading "# " provenance line, then "q,d,min_nonzero_p,p_max" rows.
std::string explore_csv(const RunConfig& cfg, const std::vector<ExploreRow>& rows);

}  // namespace syzlab
