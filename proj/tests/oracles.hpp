// Copyright 2026 The gptbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Test-only brute-force oracles.  These deliberately avoid the production
// algorithms: the LP oracle enumerates candidate vertices as intersections
// of n active constraints, and the clique oracles walk every clique (or
// every subset) of a graph.  They are the reference answers the fast paths
// are checked against.

#ifndef GPTBOX_TESTS_ORACLES_HPP
#define GPTBOX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gptbox/linalg.hpp"
#include "gptbox/linprog.hpp"
#include "gptbox/rational.hpp"

namespace gptbox::testing {

struct OracleLpResult {
  bool feasible = false;
  Rational optimum;  // valid when feasible (0 for pure feasibility problems)
};

// Exhaustive vertex enumeration.  Sound for pointed, bounded feasible
// regions (all test generators bound their variables).  Arithmetic is raw
// GMP rationals; a maximal independent set of equality rows is pinned into
// every candidate basis (equalities are active at every feasible point).
inline OracleLpResult lp_vertex_oracle(const LinearProgram &lp) {
  const int n = lp.num_vars;
  struct Row {
    std::vector<mpq_class> lhs;
    mpq_class rhs;
    bool eq;
  };
  auto to_q = [](const Scalar &s) { return s.rational_value().raw(); };
  std::vector<Row> rows;
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i) {
    Row r{{}, to_q(lp.eq_rhs[i]), true};
    for (const auto &s : lp.eq_lhs[i]) r.lhs.push_back(to_q(s));
    rows.push_back(std::move(r));
  }
  for (size_t i = 0; i < lp.ub_lhs.size(); ++i) {
    Row r{{}, to_q(lp.ub_rhs[i]), false};
    for (const auto &s : lp.ub_lhs[i]) r.lhs.push_back(to_q(s));
    rows.push_back(std::move(r));
  }
  for (int v = 0; v < n; ++v) {
    if (!lp.var_nonneg(v)) continue;
    Row r{std::vector<mpq_class>(n, 0), 0, false};
    r.lhs[v] = -1;
    rows.push_back(std::move(r));  // -x_v <= 0
  }
  const int m = static_cast<int>(rows.size());

  // Square solve by Gaussian elimination; nullopt when singular.
  auto solve = [&](const std::vector<int> &sel) -> std::optional<std::vector<mpq_class>> {
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = rows[sel[r]].lhs[c];
      a[r][n] = rows[sel[r]].rhs;
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (sgn(a[r][col]) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;
      std::swap(a[piv], a[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || sgn(a[r][col]) == 0) continue;
        mpq_class f = a[r][col] / a[col][col];
        for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<mpq_class> x(n);
    for (int r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
    return x;
  };
  auto feasible_at = [&](const std::vector<mpq_class> &x) {
    for (const auto &r : rows) {
      mpq_class g = -r.rhs;
      for (int c = 0; c < n; ++c) g += r.lhs[c] * x[c];
      if (r.eq ? sgn(g) != 0 : sgn(g) > 0) return false;
    }
    return true;
  };

  // Pin a maximal independent subset of the equality rows.
  std::vector<int> pinned;
  {
    std::vector<std::vector<mpq_class>> basis;
    for (int i = 0; i < m && static_cast<int>(pinned.size()) < n; ++i) {
      if (!rows[i].eq) continue;
      std::vector<std::vector<mpq_class>> trial = basis;
      trial.push_back(rows[i].lhs);
      // Rank via elimination.
      std::vector<std::vector<mpq_class>> el = trial;
      int rank = 0;
      for (int col = 0; col < n && rank < static_cast<int>(el.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(el.size()); ++r)
          if (sgn(el[r][col]) != 0) {
            piv = r;
            break;
          }
        if (piv < 0) continue;
        std::swap(el[piv], el[rank]);
        for (int r = rank + 1; r < static_cast<int>(el.size()); ++r) {
          if (sgn(el[r][col]) == 0) continue;
          mpq_class f = el[r][col] / el[rank][col];
          for (int c = col; c < n; ++c) el[r][c] -= f * el[rank][c];
        }
        ++rank;
      }
      if (rank == static_cast<int>(trial.size())) {
        basis = std::move(trial);
        pinned.push_back(i);
      }
    }
  }

  OracleLpResult out;
  std::vector<mpq_class> obj(n, 0);
  if (lp.maximize)
    for (int c = 0; c < n; ++c) obj[c] = to_q(lp.objective[c]);
  auto consider = [&](const std::vector<int> &sel) {
    auto x = solve(sel);
    if (!x || !feasible_at(*x)) return;
    mpq_class val = 0;
    for (int c = 0; c < n; ++c) val += obj[c] * (*x)[c];
    Rational rv{val};
    if (!out.feasible || rv > out.optimum) {
      out.feasible = true;
      out.optimum = rv;
    }
  };
  std::vector<int> sel = pinned;
  auto rec = [&](auto &&self, int start) -> void {
    if (static_cast<int>(sel.size()) == n) {
      consider(sel);
      return;
    }
    for (int i = start; i < m; ++i) {
      if (std::find(pinned.begin(), pinned.end(), i) != pinned.end()) continue;
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  if (n > 0 && static_cast<int>(pinned.size()) <= n) rec(rec, 0);
  return out;
}

// Weighted graph in oracle form: adjacency bitmasks, rational weights.
struct OracleGraph {
  std::vector<uint64_t> adj;
  std::vector<Rational> w;
};

// Visits every clique exactly once by extending with higher-indexed common
// neighbours; returns the maximum weight.
inline Rational clique_walk_oracle(const OracleGraph &g) {
  const int n = static_cast<int>(g.w.size());
  Rational best(0);  // empty clique
  auto rec = [&](auto &&self, uint64_t cand, const Rational &acc) -> void {
    if (acc > best) best = acc;
    uint64_t c = cand;
    while (c) {
      int v = __builtin_ctzll(c);
      c &= c - 1;
      self(self, cand & g.adj[v] & ~((uint64_t(1) << (v + 1)) - 1), acc + g.w[v]);
    }
  };
  uint64_t all = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  rec(rec, all, Rational(0));
  return best;
}

// Literal subset enumeration for small graphs (n <= ~20).
inline Rational clique_subset_oracle(const OracleGraph &g) {
  const int n = static_cast<int>(g.w.size());
  Rational best(0);
  for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!(s >> i & 1)) continue;
      for (int j = i + 1; j < n && clique; ++j) {
        if (!(s >> j & 1)) continue;
        if (!(g.adj[i] >> j & 1)) clique = false;
      }
    }
    if (!clique) continue;
    Rational total(0);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) total += g.w[i];
    if (total > best) best = total;
  }
  return best;
}

}  // namespace gptbox::testing

#endif  // GPTBOX_TESTS_ORACLES_HPP
