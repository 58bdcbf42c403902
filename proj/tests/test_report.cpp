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

#include <regex>

#include "doctest.h"
#include "syzlab/error.hpp"
#include "syzlab/report.hpp"

using namespace syzlab;

namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("m2 display of the twisted cubic") {
  const BettiTable t = betti_table(1, 0, 3, std::nullopt, {});
  CHECK(to_m2(t) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n"
        "    2: . . .\n");
}

TEST_CASE("m2 display marks missing cells") {
  const BettiTable t = betti_table(1, 0, 3, std::pair{0, 1}, {});
  const std::string s = to_m2(t);
  CHECK(s.find("total: 1 3") != std::string::npos);
}

TEST_CASE("JSON output is byte-reproducible") {
  RunConfig cfg;
  cfg.command = "betti";
  cfg.n = 2;
  cfg.d = 2;
  const std::string a = envelope(cfg, to_json(betti_table(2, 0, 2, std::nullopt, cfg.engine()))).dump();
  const std::string b = envelope(cfg, to_json(betti_table(2, 0, 2, std::nullopt, cfg.engine()))).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == "syzygy-lab/1");
  CHECK(j["engine_version"] == kEngineVersion);
  CHECK(j["config"]["field_mode"] == "two-prime");
  CHECK(j["config"]["primes"].size() == 2);
  CHECK(a.find("wall_time") == std::string::npos);
}

TEST_CASE("normalized diagram geometry") {
  const BettiTable cubic = betti_table(1, 0, 3, std::nullopt, {});
  const std::string svg = render_normalized_diagram(cubic, 640);
  CHECK(svg == render_normalized_diagram(cubic, 640));
  CHECK(count(svg, "data-q=\"1\"") == 2);
  CHECK(svg.find("data-p=\"1\" data-q=\"1\" data-x=\"0.333\"") != std::string::npos);
  CHECK(svg.find("data-p=\"2\" data-q=\"1\" data-x=\"0.667\"") != std::string::npos);
  CHECK(count(svg, "<text") == 3);

  const BettiTable plane = betti_table(2, 0, 3, std::nullopt, {});
  const std::string s2 = render_normalized_diagram(plane, 400);
  CHECK(count(s2, "data-q=\"2\"") == 1);
  CHECK(s2.find("data-p=\"7\" data-q=\"2\" data-x=\"0.778\"") != std::string::npos);
}

TEST_CASE("all-zero table renders blank") {
  BettiTable t;
  t.n = 1; t.b = 0; t.d = 2; t.v = 3; t.r_d = 2;
  t.p_lo = 0; t.p_hi = 2; t.q_lo = 0; t.q_hi = 2;
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2; ++p) t.cells[{p, q}] = CellResult{};
  const std::string svg = render_normalized_diagram(t, 200);
  CHECK(count(svg, "data-p") == 0);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("diagram needs a complete table") {
  const BettiTable t = betti_table(1, 0, 3, std::pair{0, 1}, {});
  CHECK_THROWS_AS(render_normalized_diagram(t, 640), IncompleteTable);
}

TEST_CASE("bigint JSON") {
  CHECK(bigint_json(BigInt(42)) == 42);
  CHECK(bigint_json(binom_safe(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("explore CSV carries its configuration") {
  RunConfig cfg;
  cfg.command = "explore";
  const std::vector<ExploreRow> rows{{2, 3, 7, 8}, {2, 4, std::nullopt, 8}};
  const std::string csv = explore_csv(cfg, rows);
  CHECK(csv.rfind("# schema=syzygy-lab/1", 0) == 0);
  CHECK(csv.find("\nq,d,min_nonzero_p,p_max\n2,3,7,8\n2,4,,8\n") != std::string::npos);
}
