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

#include "syzlab/betti.hpp"

#include <algorithm>
#include <chrono>

#include "syzlab/error.hpp"
#include "syzlab/parallel.hpp"
#include "syzlab/result_store.hpp"

namespace syzlab {

const char* to_string(FieldMode m) {
  switch (m) {
    case FieldMode::Exact: return "exact";
    case FieldMode::TwoPrime: return "two-prime";
    case FieldMode::OnePrime: return "one-prime";
  }
  return "?";
}

const char* to_string(CertLevel l) {
  switch (l) {
    case CertLevel::Exact: return "exact";
    case CertLevel::TwoPrime: return "two-prime";
    case CertLevel::OnePrime: return "one-prime";
  }
  return "?";
}

FieldMode parse_field_mode(const std::string& s) {
  if (s == "exact") return FieldMode::Exact;
  if (s == "two-prime") return FieldMode::TwoPrime;
  if (s == "one-prime") return FieldMode::OnePrime;
  throw DomainError("unknown field mode '" + s + "'");
}

CertLevel parse_cert_level(const std::string& s) {
  if (s == "exact") return CertLevel::Exact;
  if (s == "two-prime") return CertLevel::TwoPrime;
  if (s == "one-prime") return CertLevel::OnePrime;
  throw DomainError("unknown certification level '" + s + "'");
}

std::vector<std::uint64_t> EngineConfig::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : prime_seeds) {
    out.push_back(random_prime(prime_bits, s));
    if (mode == FieldMode::OnePrime) break;
  }
  if (out.empty()) throw DomainError("EngineConfig: no prime seeds");
  return out;
}

namespace {

struct RankResult {
  std::int64_t rank = 0;
  CertLevel level = CertLevel::Exact;
  bool agreement = true;
};

RankResult rank_with(const SparseMatrix& m, const EngineConfig& cfg,
                     const std::vector<std::uint64_t>& primes) {
  if (m.nnz() == 0) return {};
  switch (cfg.mode) {
    case FieldMode::Exact:
      return {rational_rank(m), CertLevel::Exact, true};
    case FieldMode::OnePrime:
      return {rank_mod_p(m, PrimeField(primes.front()), cfg.rank), CertLevel::OnePrime, true};
    case FieldMode::TwoPrime: {
      if (primes.size() < 2) throw DomainError("two-prime mode needs two prime seeds");
      RankCertificate c = certified_rank(m, primes, cfg.exact_threshold, cfg.rank);
      if (c.exact_over_rationals) return {c.rank, CertLevel::Exact, true};
      return {c.rank, c.agreement ? CertLevel::TwoPrime : CertLevel::OnePrime, c.agreement};
    }
  }
  return {};
}

BlockCohomology block_cohomology_with(const Parameters& P, const Weight& w, const EngineConfig& cfg,
                                      const std::vector<std::uint64_t>& primes) {
  KoszulBlock blk = build_block(P, w, cfg.block);
  BlockCohomology r;
  r.weight = w;
  r.in_dim = blk.in_dim;
  r.mid_dim = blk.mid_dim;
  r.out_dim = blk.out_dim;
  RankResult ri = rank_with(blk.d_in, cfg, primes);
  RankResult ro = rank_with(blk.d_out, cfg, primes);
  r.rank_in = ri.rank;
  r.rank_out = ro.rank;
  r.level = std::min(ri.level, ro.level);
  r.agreement = ri.agreement && ro.agreement;
  r.dim = r.mid_dim - r.rank_in - r.rank_out;
  if (r.dim < 0)
    throw Error("block at weight " + w.to_string() +
                ": rank(d_in) + rank(d_out) exceeds the middle dimension");
  return r;
}

StoreKey store_key(const Parameters& P, const EngineConfig& cfg,
                   const std::vector<std::uint64_t>& primes) {
  StoreKey k;
  k.n = P.n;
  k.b = P.b;
  k.d = P.d;
  k.p = P.p;
  k.q = P.q;
  k.mode = to_string(cfg.mode);
  k.engine_version = kEngineVersion;
  if (cfg.mode != FieldMode::Exact) k.primes = primes;
  return k;
}

}  // namespace

BlockCohomology block_cohomology(const Parameters& P, const Weight& w, const EngineConfig& cfg) {
  return block_cohomology_with(P, w, cfg, cfg.primes());
}

CellResult kpq_dim(const Parameters& P, const EngineConfig& cfg) {
  P.validate();
  const auto t0 = std::chrono::steady_clock::now();
  CellResult cell;
  const std::vector<std::uint64_t> primes = cfg.primes();
  if (cfg.mode != FieldMode::Exact) cell.primes = primes;

  if (P.q > P.n + 1 || P.p >= P.v || P.mid_degree() < 0) {
    cell.analytic_zero = true;
    return cell;
  }

  const StoreKey key = store_key(P, cfg, primes);
  if (cfg.store) {
    if (auto rec = cfg.store->get(key)) {
      cell.dim = rec->dim;
      cell.level = parse_cert_level(rec->level);
      cell.agreement = cell.level != CertLevel::OnePrime || cfg.mode == FieldMode::OnePrime;
      cell.block_count = rec->block_count;
      cell.max_block_dim = rec->max_block_dim;
      cell.wall_time_ms = static_cast<double>(rec->wall_time_ms);
      cell.from_cache = true;
      return cell;
    }
  }

  const std::vector<Weight> weights = cfg.use_symmetry ? dominant_weights(P) : enumerate_weights(P);
  std::vector<BlockCohomology> parts(weights.size());
  parallel_for(weights.size(), cfg.threads, [&](std::size_t i) {
    parts[i] = block_cohomology_with(P, weights[i], cfg, primes);
  });
  for (const BlockCohomology& bc : parts) {
    const std::int64_t mult = cfg.use_symmetry ? orbit_size(bc.weight) : 1;
    cell.dim += mult * bc.dim;
    cell.level = std::min(cell.level, bc.level);
    cell.agreement = cell.agreement && bc.agreement;
    cell.max_block_dim = std::max(cell.max_block_dim, bc.mid_dim);
  }
  cell.block_count = static_cast<std::int64_t>(parts.size());
  cell.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (cfg.store) {
    StoreRecord rec;
    rec.n = P.n;
    rec.b = P.b;
    rec.d = P.d;
    rec.p = P.p;
    rec.q = P.q;
    rec.dim = cell.dim;
    rec.level = to_string(cell.level);
    rec.primes = key.primes;
    rec.engine_version = kEngineVersion;
    rec.wall_time_ms = static_cast<std::int64_t>(cell.wall_time_ms);
    rec.block_count = cell.block_count;
    rec.max_block_dim = cell.max_block_dim;
    cfg.store->put(key, rec);
  }
  return cell;
}

std::optional<std::int64_t> BettiTable::dim(int p, int q) const {
  auto it = cells.find({p, q});
  if (it == cells.end()) return std::nullopt;
  return it->second.dim;
}

CertLevel BettiTable::level() const {
  CertLevel l = CertLevel::Exact;
  for (const auto& [pq, c] : cells) l = std::min(l, c.level);
  return l;
}

int lowest_row(int b, int d) { return b >= d ? -(b / d) : 0; }

BettiTable betti_table(int n, int b, int d, std::optional<std::pair<int, int>> p_window,
                       const EngineConfig& cfg) {
  if (d < 1 || b < 0) throw DomainError("betti_table: need d >= 1 and b >= 0");
  const Parameters base = Parameters::make(n, b, d, 0, 0);
  BettiTable t;
  t.n = n;
  t.b = b;
  t.d = d;
  t.v = base.v;
  t.r_d = base.r_d;
  t.p_lo = 0;
  t.p_hi = static_cast<int>(base.r_d);
  if (p_window) {
    t.p_lo = std::max(0, p_window->first);
    t.p_hi = std::min(static_cast<int>(base.r_d), p_window->second);
  }
  t.q_lo = lowest_row(b, d);
  t.q_hi = n + 1;
  for (int q = t.q_lo; q <= t.q_hi; ++q)
    for (int p = t.p_lo; p <= t.p_hi; ++p) {
      try {
        t.cells[{p, q}] = kpq_dim(Parameters::make(n, b, d, p, q), cfg);
      } catch (const InfeasibleBlock& e) {
        t.failures[{p, q}] = e.what();
      }
    }
  return t;
}

bool EulerReport::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

BigInt hilbert_numerator_coeff(int n, int b, int d, int j) {
  const std::int64_t v = binom_i64(d + n, n);
  BigInt c = 0;
  for (std::int64_t i = 0; i <= v; ++i) {
    const std::int64_t m = j - i;
    // C(md+b+n, n) vanishes once md+b < 0, including every negative argument.
    BigInt h = binom_safe(m * d + b + n, n);
    if (h == 0) continue;
    BigInt term = binom_safe(v, i) * h;
    if (i % 2) c -= term;
    else c += term;
  }
  return c;
}

EulerReport euler_check(const BettiTable& t) {
  std::vector<std::string> missing;
  for (int q = t.q_lo; q <= t.q_hi; ++q)
    for (int p = 0; p <= t.r_d; ++p)
      if (!t.computed(p, q)) missing.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")");
  if (!missing.empty()) {
    std::string msg = "euler_check: table incomplete, missing " + std::to_string(missing.size()) + " cells:";
    for (std::size_t i = 0; i < missing.size() && i < 12; ++i) msg += " " + missing[i];
    if (missing.size() > 12) msg += " ...";
    throw IncompleteTable(msg);
  }
  EulerReport rep;
  const int j_hi = static_cast<int>(t.v) + t.n + 2;
  for (int j = t.q_lo; j <= j_hi; ++j) {
    BigInt s = 0;
    for (int q = t.q_lo; q <= t.q_hi; ++q) {
      const int p = j - q;
      if (p < 0 || p > t.r_d) continue;
      const std::int64_t x = *t.dim(p, q);
      if (p % 2) s -= x;
      else s += x;
    }
    rep.residuals[j] = s - hilbert_numerator_coeff(t.n, t.b, t.d, j);
  }
  return rep;
}

DualityReport check_duality(const BettiTable& t, const BettiTable& dual) {
  if (t.d < t.b + t.n + 1)
    throw DomainError("check_duality: requires d >= b + n + 1 (got n=" + std::to_string(t.n) +
                      ", b=" + std::to_string(t.b) + ", d=" + std::to_string(t.d) +
                      "); the dual twist d-n-1-b would be negative");
  DualityReport rep;
  rep.b_dual = t.d - t.n - 1 - t.b;
  if (dual.n != t.n || dual.d != t.d || dual.b != rep.b_dual)
    throw DomainError("check_duality: dual table must have n, d equal and b = d-n-1-b");
  for (const auto& [pq, cell] : t.cells) {
    const auto [p, q] = pq;
    if (q < 0 || q > t.n) continue;
    const std::int64_t pd = t.r_d - p - t.n;
    if (pd < 0) continue;
    auto other = dual.dim(static_cast<int>(pd), t.n - q);
    if (!other) continue;
    ++rep.checked;
    if (*other != cell.dim)
      rep.mismatches.push_back({p, q, cell.dim, static_cast<int>(pd), t.n - q, *other});
  }
  return rep;
}

DualityReport check_duality(int n, int b, int d, std::optional<std::pair<int, int>> p_window,
                            const EngineConfig& cfg) {
  if (d < b + n + 1)
    throw DomainError("check_duality: requires d >= b + n + 1 (got n=" + std::to_string(n) +
                      ", b=" + std::to_string(b) + ", d=" + std::to_string(d) + ")");
  const BettiTable t = betti_table(n, b, d, p_window, cfg);
  std::optional<std::pair<int, int>> dual_window;
  if (p_window) {
    const int shift = static_cast<int>(t.r_d) - n;
    dual_window = std::pair{shift - p_window->second, shift - p_window->first};
  }
  const BettiTable dual = betti_table(n, d - n - 1 - b, d, dual_window, cfg);
  return check_duality(t, dual);
}

}  // namespace syzlab
