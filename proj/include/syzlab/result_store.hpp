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
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace syzlab {

struct StoreKey {
  int n = 0, b = 0, d = 0, p = 0, q = 0;
  std::string mode;
  std::string engine_version;
  std::vector<std::uint64_t> primes;

  /// Canonical text form; equal keys have equal strings.
  std::string canonical() const;
};

struct StoreRecord {
  int n = 0, b = 0, d = 0, p = 0, q = 0;
  std::int64_t dim = 0;
  std::string level;
  std::vector<std::uint64_t> primes;
  std::string engine_version;
  std::int64_t wall_time_ms = 0;
  std::int64_t block_count = 0;
  std::int64_t max_block_dim = 0;

  bool operator==(const StoreRecord&) const = default;
};

/// Append-only JSON-lines file of certified cells, one record per line, each carrying
/// its key and an FNV-1a checksum of its canonical payload. Thread-safe.
class ResultStore {
 public:
  /// Opens (creating if needed) <dir>/results.jsonl.
  explicit ResultStore(std::filesystem::path dir);

  /// $SYZ_CACHE_DIR, or ./.syzcache when unset.
  static std::filesystem::path default_dir();

  /// Write-once: returns false, leaving the store untouched, when key is already present.
  bool put(const StoreKey& key, const StoreRecord& rec);
  /// std::nullopt when absent; throws ChecksumError for a damaged record.
  std::optional<StoreRecord> get(const StoreKey& key) const;

  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  struct Slot {
    StoreRecord rec;
    bool corrupt = false;
  };
  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<std::string, Slot> slots_;
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace syzlab
