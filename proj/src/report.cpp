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

#include "syzlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

using nlohmann::ordered_json;

EngineConfig RunConfig::engine() const {
  EngineConfig e;
  e.mode = mode;
  e.prime_seeds = prime_seeds;
  e.threads = threads;
  e.exact_threshold = exact_threshold;
  e.block.memory_cap_bytes = memory_cap;
  return e;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["n"] = n;
  j["b"] = b;
  j["d"] = d;
  j["p"] = p ? ordered_json(*p) : ordered_json(nullptr);
  j["q"] = q ? ordered_json(*q) : ordered_json(nullptr);
  j["p_window"] = p_window ? ordered_json::array({p_window->first, p_window->second}) : ordered_json(nullptr);
  j["field_mode"] = syzlab::to_string(mode);
  j["prime_seeds"] = prime_seeds;
  EngineConfig e = engine();
  j["primes"] = e.primes();
  j["threads"] = threads;
  j["memory_cap"] = memory_cap;
  j["exact_threshold"] = exact_threshold;
  j["format"] = format;
  j["cache_dir"] = cache_dir;
  return j;
}

ordered_json envelope(const RunConfig& cfg, ordered_json result) {
  ordered_json j;
  j["schema"] = kSchema;
  j["engine_version"] = kEngineVersion;
  j["config"] = cfg.to_json();
  j["result"] = std::move(result);
  return j;
}

ordered_json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

ordered_json to_json(const CellResult& c) {
  ordered_json j;
  j["dim"] = c.dim;
  j["level"] = to_string(c.level);
  j["agreement"] = c.agreement;
  j["primes"] = c.primes;
  j["analytic_zero"] = c.analytic_zero;
  j["block_count"] = c.block_count;
  j["max_block_dim"] = c.max_block_dim;
  return j;
}

ordered_json to_json(const BettiTable& t) {
  ordered_json j;
  j["n"] = t.n;
  j["b"] = t.b;
  j["d"] = t.d;
  j["r_d"] = t.r_d;
  j["p_window"] = {t.p_lo, t.p_hi};
  j["q_range"] = {t.q_lo, t.q_hi};
  j["level"] = to_string(t.level());
  ordered_json cells = ordered_json::array();
  for (int q = t.q_lo; q <= t.q_hi; ++q)
    for (int p = t.p_lo; p <= t.p_hi; ++p) {
      auto it = t.cells.find({p, q});
      if (it == t.cells.end()) continue;
      ordered_json c = to_json(it->second);
      c.erase("primes");
      ordered_json cell;
      cell["p"] = p;
      cell["q"] = q;
      cell.update(c);
      cells.push_back(std::move(cell));
    }
  j["cells"] = std::move(cells);
  ordered_json fails = ordered_json::array();
  for (const auto& [pq, msg] : t.failures) fails.push_back({{"p", pq.first}, {"q", pq.second}, {"error", msg}});
  j["failures"] = std::move(fails);
  return j;
}

ordered_json to_json(const EulerReport& r) {
  ordered_json j;
  j["all_zero"] = r.all_zero();
  ordered_json res = ordered_json::array();
  for (const auto& [deg, x] : r.residuals) res.push_back({{"degree", deg}, {"residual", bigint_json(x)}});
  j["residuals"] = std::move(res);
  return j;
}

ordered_json to_json(const DualityReport& r) {
  ordered_json j;
  j["b_dual"] = r.b_dual;
  j["checked"] = r.checked;
  j["ok"] = r.ok();
  ordered_json mm = ordered_json::array();
  for (const auto& m : r.mismatches)
    mm.push_back({{"p", m.p}, {"q", m.q}, {"dim", m.dim}, {"p_dual", m.p_dual}, {"q_dual", m.q_dual}, {"dual_dim", m.dual_dim}});
  j["mismatches"] = std::move(mm);
  return j;
}

ordered_json to_json(const PredictedRange& r) {
  ordered_json j;
  j["source"] = to_string(r.source);
  j["q"] = r.q;
  j["lo"] = bigint_json(r.lo);
  j["hi"] = bigint_json(r.hi);
  j["empty"] = r.empty();
  j["exact"] = r.exact;
  j["validity"] = r.validity;
  j["regime"] = to_string(r.regime);
  return j;
}

ordered_json to_json(const CompareReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["b"] = r.b;
  j["d"] = r.d;
  j["ok"] = r.ok;
  ordered_json rows = ordered_json::array();
  for (const RowComparison& row : r.rows) {
    ordered_json jr;
    jr["q"] = row.q;
    jr["nonzero"] = row.nonzero;
    ordered_json checks = ordered_json::array();
    for (const RangeCheck& c : row.checks) {
      ordered_json jc;
      jc["range"] = to_json(c.range);
      jc["containment"] = to_string(c.containment);
      jc["exactness"] = to_string(c.exactness);
      jc["exploratory"] = c.range.regime != Regime::Proved;
      jc["outside"] = c.outside;
      jc["zeros_inside"] = c.zeros_inside;
      checks.push_back(std::move(jc));
    }
    jr["checks"] = std::move(checks);
    jr["green_violations"] = row.green_violations;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json to_json(const SchurMultiplicityTable& t) {
  ordered_json j;
  j["n"] = t.params.n;
  j["b"] = t.params.b;
  j["d"] = t.params.d;
  j["p"] = t.params.p;
  j["q"] = t.params.q;
  ordered_json ms = ordered_json::array();
  for (const auto& [lambda, m] : t.entries)
    ms.push_back({{"partition", lambda.parts()},
                  {"multiplicity", m},
                  {"weyl_dim", bigint_json(weyl_dim(lambda, t.params.n + 1))}});
  j["multiplicities"] = std::move(ms);
  j["total_dim"] = t.total_dim;
  ordered_json ws = ordered_json::array();
  for (auto it = t.weight_dims.rbegin(); it != t.weight_dims.rend(); ++it)
    if (it->second != 0)
      ws.push_back({{"weight", it->first.vec()}, {"dim", it->second}, {"orbit", orbit_size(it->first)}});
  j["weight_dims"] = std::move(ws);
  return j;
}

ordered_json to_json(const StabilityReport& r) {
  ordered_json j;
  j["consistent"] = r.consistent;
  ordered_json es = ordered_json::array();
  for (const auto& e : r.entries) es.push_back({{"n", e.n}, {"dim", e.dim}, {"included", e.included}});
  j["entries"] = std::move(es);
  return j;
}

ordered_json to_json(const KoszulChain& c) {
  const GradedPieceBasis lin(c.n, c.d), tens(c.n, c.q * c.d + c.b);
  ordered_json j;
  j["n"] = c.n;
  j["b"] = c.b;
  j["d"] = c.d;
  j["p"] = c.p;
  j["q"] = c.q;
  ordered_json terms = ordered_json::array();
  for (const auto& [x, coeff] : c.terms) {
    ordered_json w = ordered_json::array();
    for (std::uint32_t i : x.wedge) w.push_back(lin[i].to_string());
    terms.push_back({{"coeff", coeff}, {"wedge", std::move(w)}, {"tensor", tens[x.tensor].to_string()}});
  }
  j["terms"] = std::move(terms);
  j["text"] = chain_to_string(c);
  return j;
}

std::string to_m2(const BettiTable& t) {
  int last = t.p_lo;
  for (const auto& [pq, c] : t.cells)
    if (c.dim > 0) last = std::max(last, pq.first);
  for (const auto& [pq, msg] : t.failures) last = std::max(last, pq.first);
  std::vector<int> cols;
  for (int p = t.p_lo; p <= last; ++p) cols.push_back(p);

  auto cell_text = [&](int p, int q) -> std::string {
    auto x = t.dim(p, q);
    if (!x) return "?";
    return *x == 0 ? "." : std::to_string(*x);
  };
  std::vector<std::string> totals;
  for (int p : cols) {
    std::int64_t s = 0;
    bool unknown = false;
    for (int q = t.q_lo; q <= t.q_hi; ++q) {
      auto x = t.dim(p, q);
      if (!x) unknown = true;
      else s += *x;
    }
    totals.push_back(unknown ? "?" : std::to_string(s));
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = std::max(std::to_string(cols[i]).size(), totals[i].size());
    for (int q = t.q_lo; q <= t.q_hi; ++q) width[i] = std::max(width[i], cell_text(cols[i], q).size());
  }
  std::size_t label = std::string("total:").size();
  for (int q = t.q_lo; q <= t.q_hi; ++q) label = std::max(label, std::to_string(q).size() + 1);

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << std::string(label, ' ');
  for (std::size_t i = 0; i < cols.size(); ++i) out << ' ' << pad(std::to_string(cols[i]), width[i]);
  out << '\n' << pad("total:", label);
  for (std::size_t i = 0; i < cols.size(); ++i) out << ' ' << pad(totals[i], width[i]);
  out << '\n';
  for (int q = t.q_lo; q <= t.q_hi; ++q) {
    out << pad(std::to_string(q) + ":", label);
    for (std::size_t i = 0; i < cols.size(); ++i) out << ' ' << pad(cell_text(cols[i], q), width[i]);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string fmt3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_normalized_diagram(const BettiTable& t, int width_px) {
  if (!t.full_window())
    throw IncompleteTable("render_normalized_diagram: table must cover p in [0, r_d]");
  for (int q = t.q_lo; q <= t.q_hi; ++q)
    for (int p = 0; p <= t.r_d; ++p)
      if (!t.computed(p, q))
        throw IncompleteTable("render_normalized_diagram: cell (" + std::to_string(p) + "," +
                              std::to_string(q) + ") not computed");
  const int left = 48, top = 24, row_h = 24, right = 8;
  const int plot_w = std::max(16, width_px - left - right);
  const int rows = t.q_hi - t.q_lo + 1;
  const int height = top + rows * row_h + 8;
  std::int64_t max_dim = 0;
  for (const auto& [pq, c] : t.cells) max_dim = std::max(max_dim, c.dim);
  const double denom = std::log1p(static_cast<double>(max_dim));
  const double r = static_cast<double>(t.r_d);

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + plot_w + right << "\" height=\""
    << height << "\" viewBox=\"0 0 " << left + plot_w + right << ' ' << height << "\">\n";
  s << "<title>normalized Betti diagram n=" << t.n << " b=" << t.b << " d=" << t.d << "</title>\n";
  s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << rows * row_h
    << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (int q = t.q_lo; q <= t.q_hi; ++q) {
    const int y = top + (q - t.q_lo) * row_h;
    s << "<text x=\"4\" y=\"" << y + row_h - 7 << "\" font-size=\"12\">q=" << q << "</text>\n";
    for (int p = 0; p <= t.r_d; ++p) {
      const std::int64_t x = *t.dim(p, q);
      if (x == 0) continue;
      const double centre = p / r;
      const double x0 = std::max(0.0, centre - 0.5 / r), x1 = std::min(1.0, centre + 0.5 / r);
      const double shade = denom > 0 ? std::log1p(static_cast<double>(x)) / denom : 1.0;
      const int g = static_cast<int>(std::lround(224.0 * (1.0 - shade)));
      s << "<rect data-p=\"" << p << "\" data-q=\"" << q << "\" data-x=\"" << fmt3(centre) << "\" x=\""
        << fmt3(left + x0 * plot_w) << "\" y=\"" << y + 1 << "\" width=\"" << fmt3((x1 - x0) * plot_w)
        << "\" height=\"" << row_h - 2 << "\" fill=\"rgb(" << g << ',' << g << ',' << g << ")\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

std::string explore_csv(const RunConfig& cfg, const std::vector<ExploreRow>& rows) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " engine_version=" << kEngineVersion << " config=" << cfg.to_json().dump() << '\n';
  s << "q,d,min_nonzero_p,p_max\n";
  for (const ExploreRow& r : rows)
    s << r.q << ',' << r.d << ',' << (r.min_nonzero_p ? std::to_string(*r.min_nonzero_p) : "") << ','
      << r.p_max << '\n';
  return s.str();
}

}  // namespace syzlab
