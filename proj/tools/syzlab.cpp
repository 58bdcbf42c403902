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

// syzlab: command-line driver. Exit codes: 0 ok, 1 usage, 2 infeasible, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "syzlab/betti.hpp"
#include "syzlab/bounds.hpp"
#include "syzlab/cycles.hpp"
#include "syzlab/error.hpp"
#include "syzlab/report.hpp"
#include "syzlab/result_store.hpp"
#include "syzlab/schur.hpp"

namespace {

using namespace syzlab;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kVerifyFailed = 3 };

struct Options {
  int n = 0, b = 0, d = 0;
  int p = 0, q = 0;
  std::optional<int> p_lo, p_hi;
  std::string field_mode = "two-prime";
  std::vector<std::uint64_t> seeds{1, 2};
  int threads = 1;
  std::uint64_t memory_cap = std::uint64_t{2} << 30;
  std::int64_t exact_threshold = 2500;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::string out;
  int width = 640;
  std::vector<std::uint32_t> f_indices;
  std::optional<std::uint32_t> s_index;
  std::vector<int> ds, qs, n_list;
  int p_max = 12;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Options& o, bool need_pq, bool need_d = true) {
  sub->add_option("--n", o.n, "projective dimension (n >= 1)")->required();
  sub->add_option("--b", o.b, "twist of the line bundle")->required();
  auto* d = sub->add_option("--d", o.d, "Veronese degree (d >= 1)");
  if (need_d) d->required();
  if (need_pq) {
    sub->add_option("--p", o.p, "homological index")->required();
    sub->add_option("--q", o.q, "row index")->required();
  }
  sub->add_option("--field-mode", o.field_mode, "exact | two-prime | one-prime")
      ->check(CLI::IsMember({"exact", "two-prime", "one-prime"}));
  sub->add_option("--seeds", o.seeds, "prime seeds");
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--memory-cap", o.memory_cap, "per-block memory cap in bytes");
  sub->add_option("--exact-threshold", o.exact_threshold, "rows*cols limit for rational rank");
  sub->add_option("--format", o.format, "json | csv | m2 | svg")
      ->check(CLI::IsMember({"json", "csv", "m2", "svg", "text"}));
  sub->add_option("--cache-dir", o.cache_dir, "result store directory (default $SYZ_CACHE_DIR or ./.syzcache)");
  sub->add_flag("--no-cache", o.no_cache, "do not read or write the result store");
  sub->add_option("--out", o.out, "write output to this file instead of stdout");
}

RunConfig run_config(const std::string& command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.n = o.n;
  c.b = o.b;
  c.d = o.d;
  c.mode = parse_field_mode(o.field_mode);
  c.prime_seeds = o.seeds;
  c.threads = o.threads;
  c.memory_cap = o.memory_cap;
  c.exact_threshold = o.exact_threshold;
  c.format = o.format;
  c.cache_dir = o.no_cache ? "" : (o.cache_dir.empty() ? ResultStore::default_dir().string() : o.cache_dir);
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (o.d < 1) throw UsageError("--d must be >= 1");
  if (c.mode != FieldMode::Exact && o.seeds.size() < (c.mode == FieldMode::TwoPrime ? 2u : 1u))
    throw UsageError("--seeds: not enough seeds for field mode");
  return c;
}

struct Session {
  RunConfig cfg;
  std::unique_ptr<ResultStore> store;
  EngineConfig engine;

  Session(RunConfig c) : cfg(std::move(c)) {
    engine = cfg.engine();
    if (!cfg.cache_dir.empty()) {
      store = std::make_unique<ResultStore>(cfg.cache_dir);
      engine.store = store.get();
    }
  }
};

std::optional<std::pair<int, int>> window_of(const Options& o, std::int64_t r_d) {
  if (!o.p_lo && !o.p_hi) return std::nullopt;
  return std::pair<int, int>{o.p_lo.value_or(0), o.p_hi.value_or(static_cast<int>(r_d))};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out);
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string table_csv(const RunConfig& cfg, const BettiTable& t) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " engine_version=" << kEngineVersion << " config=" << cfg.to_json().dump() << '\n';
  s << "p,q,dim,level\n";
  for (int q = t.q_lo; q <= t.q_hi; ++q)
    for (int p = t.p_lo; p <= t.p_hi; ++p) {
      auto it = t.cells.find({p, q});
      if (it != t.cells.end()) s << p << ',' << q << ',' << it->second.dim << ',' << to_string(it->second.level) << '\n';
    }
  return s.str();
}

int cmd_kpq(const Options& o) {
  RunConfig cfg = run_config("kpq", o);
  cfg.p = o.p;
  cfg.q = o.q;
  Session s(cfg);
  const Parameters params = Parameters::make(o.n, o.b, o.d, o.p, o.q);
  const CellResult r = kpq_dim(params, s.engine);
  if (o.format == "json") {
    emit(o, dump(envelope(cfg, to_json(r))));
  } else {
    std::ostringstream t;
    t << "K_{" << o.p << "," << o.q << "}(n=" << o.n << ", b=" << o.b << ", d=" << o.d << ") = " << r.dim
      << "  [" << to_string(r.level) << (r.agreement ? "" : ", primes disagree") << "]\n";
    emit(o, t.str());
  }
  return kOk;
}

int cmd_betti(const Options& o, bool render_only) {
  RunConfig cfg = run_config(render_only ? "render" : "betti", o);
  const std::int64_t r_d = binom_i64(o.d + o.n, o.n) - 1;
  auto window = window_of(o, r_d);
  cfg.p_window = window;
  Session s(cfg);
  const BettiTable t = betti_table(o.n, o.b, o.d, window, s.engine);
  std::string fmt = render_only ? "svg" : o.format;
  if (fmt == "json") emit(o, dump(envelope(cfg, to_json(t))));
  else if (fmt == "csv") emit(o, table_csv(cfg, t));
  else if (fmt == "svg") emit(o, render_normalized_diagram(t, o.width));
  else emit(o, to_m2(t));
  for (const auto& [pq, msg] : t.failures) std::cerr << "infeasible (" << pq.first << "," << pq.second << "): " << msg << '\n';
  return t.failures.empty() ? kOk : kInfeasible;
}

int cmd_verify(const Options& o) {
  RunConfig cfg = run_config("verify", o);
  const std::int64_t r_d = binom_i64(o.d + o.n, o.n) - 1;
  auto window = window_of(o, r_d);
  cfg.p_window = window;
  Session s(cfg);
  const BettiTable t = betti_table(o.n, o.b, o.d, window, s.engine);
  ordered_json res;
  bool ok = t.failures.empty();
  res["table"] = to_json(t);
  if (t.full_window() && t.failures.empty()) {
    EulerReport e = euler_check(t);
    ok = ok && e.all_zero();
    res["euler"] = to_json(e);
  } else {
    res["euler"] = nullptr;
  }
  if (o.d >= o.b + o.n + 1) {
    DualityReport dr = check_duality(o.n, o.b, o.d, window, s.engine);
    ok = ok && dr.ok();
    res["duality"] = to_json(dr);
  } else {
    res["duality"] = nullptr;
  }
  CompareReport cr = compare_report(t);
  ok = ok && cr.ok;
  bool agree = true;
  for (const auto& [pq, c] : t.cells) agree = agree && c.agreement;
  ok = ok && agree;
  res["bounds"] = to_json(cr);
  res["prime_agreement"] = agree;
  res["ok"] = ok;
  if (o.format == "json") {
    emit(o, dump(envelope(cfg, res)));
  } else {
    std::ostringstream txt;
    txt << to_m2(t) << "euler: " << (res["euler"].is_null() ? "skipped" : (res["euler"]["all_zero"].get<bool>() ? "ok" : "FAIL"))
        << "\nduality: " << (res["duality"].is_null() ? "skipped" : (res["duality"]["ok"].get<bool>() ? "ok" : "FAIL"))
        << "\nbounds: " << (cr.ok ? "ok" : "FAIL") << "\nprime agreement: " << (agree ? "ok" : "FAIL")
        << "\nverdict: " << (ok ? "ok" : "FAIL") << '\n';
    emit(o, txt.str());
  }
  if (!t.failures.empty()) return kInfeasible;
  return ok ? kOk : kVerifyFailed;
}

int cmd_bounds(const Options& o, std::optional<int> q) {
  RunConfig cfg = run_config("bounds", o);
  cfg.q = q;
  std::vector<PredictedRange> ranges;
  auto want = [&](int row) { return !q || *q == row; };
  if (want(0)) ranges.push_back(kp0_exact(o.n, o.b, o.d));
  if (want(1)) ranges.push_back(linear_strand_range(o.n, o.b, o.d));
  for (int row = 1; row <= o.n; ++row) {
    if (!want(row)) continue;
    ranges.push_back(effective_range(o.n, o.b, o.d, row));
    if (row >= 2) ranges.push_back(secant_range(o.n, o.b, o.d, row));
  }
  if (want(o.n)) ranges.push_back(kpn_exact(o.n, o.b, o.d));
  if (want(o.n + 1)) ranges.push_back(kpn1_exact(o.n, o.b, o.d));
  if (o.n == 2 && o.b == 0 && want(2)) ranges.push_back(plane_quadratic_range(o.d));
  ordered_json res;
  if (q && *q >= 1 && *q <= o.n) res = to_json(effective_range(o.n, o.b, o.d, *q));
  ordered_json all = ordered_json::array();
  for (const auto& r : ranges) all.push_back(to_json(r));
  res["ranges"] = std::move(all);
  emit(o, dump(envelope(cfg, res)));
  return kOk;
}

int cmd_schur(const Options& o) {
  RunConfig cfg = run_config("schur", o);
  cfg.p = o.p;
  cfg.q = o.q;
  if (cfg.mode == FieldMode::OnePrime) throw UsageError("schur requires --field-mode exact or two-prime");
  Session s(cfg);
  const SchurMultiplicityTable t = schur_multiplicities(Parameters::make(o.n, o.b, o.d, o.p, o.q), s.engine);
  ordered_json res = to_json(t);
  if (!o.n_list.empty()) res["stability"] = to_json(stability_check(o.b, o.d, o.p, o.q, o.n_list, s.engine));
  if (o.format == "json") {
    emit(o, dump(envelope(cfg, res)));
  } else {
    std::ostringstream txt;
    for (const auto& [lambda, m] : t.entries) {
      txt << "S_(";
      for (std::size_t i = 0; i < lambda.parts().size(); ++i) txt << (i ? "," : "") << lambda.parts()[i];
      txt << ")  multiplicity " << m << "  dim " << weyl_dim(lambda, o.n + 1) << '\n';
    }
    txt << "total " << t.total_dim << '\n';
    emit(o, txt.str());
  }
  return kOk;
}

int cmd_cycle(const Options& o) {
  RunConfig cfg = run_config("cycle", o);
  cfg.p = o.p;
  cfg.q = 0;
  KoszulChain c = o.f_indices.empty() && !o.s_index
                      ? default_kp0_cycle(o.n, o.b, o.d, o.p)
                      : build_kp0_cycle(o.n, o.b, o.d, o.p, o.f_indices, o.s_index.value_or(0));
  const bool nonzero = verify_nonzero_class(c);
  ordered_json res = to_json(c);
  res["is_cycle"] = apply_differential(c).empty();
  res["nonzero_class"] = nonzero;
  if (o.format == "json") emit(o, dump(envelope(cfg, res)));
  else emit(o, chain_to_string(c) + "\n");
  return nonzero ? kOk : kVerifyFailed;
}

int cmd_explore(const Options& o) {
  Options ox = o;
  ox.d = 1;
  RunConfig cfg = run_config("explore", ox);
  cfg.d = 0;
  Session s(cfg);
  std::vector<int> qs = o.qs;
  if (qs.empty())
    for (int q = 1; q <= o.n; ++q) qs.push_back(q);
  const auto rows = explore_min_nonzero(o.n, o.b, o.ds, qs, o.p_max, s.engine);
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"q", r.q}, {"d", r.d}, {"min_nonzero_p", r.min_nonzero_p ? ordered_json(*r.min_nonzero_p) : ordered_json(nullptr)}, {"p_max", r.p_max}});
    emit(o, dump(envelope(cfg, arr)));
  } else {
    emit(o, explore_csv(cfg, rows));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzlab: Koszul cohomology of Veronese embeddings"};
  app.require_subcommand(1);
  Options o;
  std::optional<int> bounds_q;

  auto* kpq = app.add_subcommand("kpq", "dimension of one K_{p,q}");
  add_common(kpq, o, true);

  auto* betti = app.add_subcommand("betti", "Betti table, optionally restricted to --p-lo..--p-hi");
  add_common(betti, o, false);
  betti->add_option("--p-lo", o.p_lo, "first column");
  betti->add_option("--p-hi", o.p_hi, "last column");
  betti->add_option("--width", o.width, "SVG width in pixels");

  auto* verify = app.add_subcommand("verify", "Euler identity, duality and bounds containment");
  add_common(verify, o, false);
  verify->add_option("--p-lo", o.p_lo, "first column");
  verify->add_option("--p-hi", o.p_hi, "last column");

  auto* bounds = app.add_subcommand("bounds", "predicted nonvanishing ranges as JSON");
  add_common(bounds, o, false);
  bounds->add_option("--q", bounds_q, "restrict to one row");

  auto* schur = app.add_subcommand("schur", "irreducible multiplicities of K_{p,q}");
  add_common(schur, o, true);
  schur->add_option("--stability-n", o.n_list, "also compare dim K_{p,q} across these n");

  auto* cycle = app.add_subcommand("cycle", "explicit nonzero class in K_{p,0}");
  add_common(cycle, o, false);
  cycle->add_option("--p", o.p, "homological index")->required();
  cycle->add_option("--f", o.f_indices, "indices of the p+1 degree-b monomials");
  cycle->add_option("--s", o.s_index, "index of the degree d-b monomial");

  auto* explore = app.add_subcommand("explore", "minimal nonzero p per row across degrees (CSV)");
  add_common(explore, o, false, false);
  explore->add_option("--ds", o.ds, "degrees to sweep")->required();
  explore->add_option("--qs", o.qs, "rows (default 1..n)");
  explore->add_option("--p-max", o.p_max, "largest p searched");

  auto* render = app.add_subcommand("render", "normalized Betti diagram as SVG");
  add_common(render, o, false);
  render->add_option("--width", o.width, "width in pixels")->check(CLI::Range(64, 8192));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kpq) return cmd_kpq(o);
    if (*betti) return cmd_betti(o, false);
    if (*verify) return cmd_verify(o);
    if (*bounds) return cmd_bounds(o, bounds_q);
    if (*schur) return cmd_schur(o);
    if (*cycle) return cmd_cycle(o);
    if (*explore) return cmd_explore(o);
    if (*render) return cmd_betti(o, true);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleBlock& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const IncompleteTable& e) {
    std::cerr << "incomplete table: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
