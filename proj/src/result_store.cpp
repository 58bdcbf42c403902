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

#include "syzlab/result_store.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "syzlab/error.hpp"

namespace syzlab {

using nlohmann::json;

std::string StoreKey::canonical() const {
  std::string s = "n=" + std::to_string(n) + ";b=" + std::to_string(b) + ";d=" + std::to_string(d) +
                  ";p=" + std::to_string(p) + ";q=" + std::to_string(q) + ";mode=" + mode +
                  ";engine=" + engine_version + ";primes=";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
  return s;
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json payload(const StoreKey& key, const StoreRecord& r) {
  return json{{"key", key.canonical()},   {"n", r.n},
              {"b", r.b},                 {"d", r.d},
              {"p", r.p},                 {"q", r.q},
              {"dim", r.dim},             {"level", r.level},
              {"primes", r.primes},       {"engine_version", r.engine_version},
              {"wall_time_ms", r.wall_time_ms}, {"block_count", r.block_count},
              {"max_block_dim", r.max_block_dim}};
}

StoreRecord from_json(const json& j) {
  StoreRecord r;
  r.n = j.at("n");
  r.b = j.at("b");
  r.d = j.at("d");
  r.p = j.at("p");
  r.q = j.at("q");
  r.dim = j.at("dim");
  r.level = j.at("level");
  r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
  r.engine_version = j.at("engine_version");
  r.wall_time_ms = j.at("wall_time_ms");
  r.block_count = j.at("block_count");
  r.max_block_dim = j.at("max_block_dim");
  return r;
}

}  // namespace

ResultStore::ResultStore(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "results.jsonl";
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j["key"].is_string()) continue;
    const std::string key = j["key"];
    Slot slot;
    try {
      const std::string sum = j.value("checksum", "");
      json body = j;
      body.erase("checksum");
      slot.corrupt = fnv1a_hex(body.dump()) != sum;
      if (!slot.corrupt) slot.rec = from_json(body);
    } catch (const json::exception&) {
      slot.corrupt = true;
    }
    slots_.try_emplace(key, std::move(slot));
  }
}

std::filesystem::path ResultStore::default_dir() {
  const char* env = std::getenv("SYZ_CACHE_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".syzcache");
}

bool ResultStore::put(const StoreKey& key, const StoreRecord& rec) {
  std::lock_guard lock(mu_);
  const std::string k = key.canonical();
  if (slots_.count(k)) return false;
  json j = payload(key, rec);
  j["checksum"] = fnv1a_hex(j.dump());
  std::ofstream out(file_, std::ios::app);
  out << j.dump() << '\n';
  out.flush();
  if (!out) throw Error("ResultStore: write to " + file_.string() + " failed");
  slots_.emplace(k, Slot{rec, false});
  return true;
}

std::optional<StoreRecord> ResultStore::get(const StoreKey& key) const {
  std::lock_guard lock(mu_);
  auto it = slots_.find(key.canonical());
  if (it == slots_.end()) return std::nullopt;
  if (it->second.corrupt)
    throw ChecksumError("ResultStore: record " + key.canonical() + " failed its checksum");
  return it->second.rec;
}

std::size_t ResultStore::size() const {
  std::lock_guard lock(mu_);
  return slots_.size();
}

}  // namespace syzlab
