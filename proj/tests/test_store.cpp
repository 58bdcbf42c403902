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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "syzlab/betti.hpp"
#include "syzlab/error.hpp"
#include "syzlab/result_store.hpp"

using namespace syzlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("syzlab_store_" + name);
  fs::remove_all(dir);
  return dir;
}

StoreKey sample_key() {
  StoreKey k;
  k.n = 2; k.b = 0; k.d = 3; k.p = 7; k.q = 2;
  k.mode = "two-prime";
  k.engine_version = kEngineVersion;
  k.primes = {1364971957, 1632560093};
  return k;
}

StoreRecord sample_record() {
  StoreRecord r;
  r.n = 2; r.b = 0; r.d = 3; r.p = 7; r.q = 2;
  r.dim = 1;
  r.level = "two-prime";
  r.primes = {1364971957, 1632560093};
  r.engine_version = kEngineVersion;
  r.block_count = 4;
  r.max_block_dim = 12;
  return r;
}

}  // namespace

TEST_CASE("records survive a reopen") {
  const fs::path dir = fresh_dir("reopen");
  {
    ResultStore s(dir);
    CHECK_FALSE(s.get(sample_key()).has_value());
    CHECK(s.put(sample_key(), sample_record()));
    CHECK(s.get(sample_key()) == sample_record());
  }
  ResultStore again(dir);
  CHECK(again.size() == 1);
  CHECK(again.get(sample_key()) == sample_record());
}

TEST_CASE("write-once") {
  ResultStore s(fresh_dir("once"));
  CHECK(s.put(sample_key(), sample_record()));
  StoreRecord other = sample_record();
  other.dim = 99;
  CHECK_FALSE(s.put(sample_key(), other));
  CHECK(s.get(sample_key())->dim == 1);
  StoreKey k2 = sample_key();
  k2.primes = {1364971957};
  CHECK(s.put(k2, other));
  CHECK(s.size() == 2);
}

TEST_CASE("tampered records fail their checksum") {
  const fs::path dir = fresh_dir("tamper");
  {
    ResultStore s(dir);
    s.put(sample_key(), sample_record());
  }
  std::ifstream in(dir / "results.jsonl");
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  const auto pos = text.find("\"dim\":1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 7, "\"dim\":2");
  std::ofstream(dir / "results.jsonl") << text;
  ResultStore s(dir);
  CHECK_THROWS_AS(s.get(sample_key()), ChecksumError);
}

TEST_CASE("engine consults the store") {
  ResultStore s(fresh_dir("engine"));
  EngineConfig cfg;
  cfg.store = &s;
  const Parameters P = Parameters::make(2, 0, 3, 7, 2);
  const CellResult first = kpq_dim(P, cfg);
  CHECK_FALSE(first.from_cache);
  const CellResult second = kpq_dim(P, cfg);
  CHECK(second.from_cache);
  CHECK(second.dim == first.dim);
  CHECK(second.level == first.level);
  CHECK(second.block_count == first.block_count);
  EngineConfig exact = cfg;
  exact.mode = FieldMode::Exact;
  CHECK_FALSE(kpq_dim(P, exact).from_cache);
}

TEST_CASE("checksum function") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
