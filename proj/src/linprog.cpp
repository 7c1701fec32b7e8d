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

#include "gptbox/linprog.hpp"

#include <algorithm>

namespace gptbox {

void LinearProgram::validate() const {
  auto check_rows = [&](const Mat &lhs, const Vec &rhs, const char *what) {
    if (lhs.size() != rhs.size()) throw DimensionMismatch(std::string(what) + ": row count mismatch");
    for (const auto &row : lhs)
      if (static_cast<int>(row.size()) != num_vars)
        throw DimensionMismatch(std::string(what) + ": row width != num_vars");
  };
  check_rows(eq_lhs, eq_rhs, "eq");
  check_rows(ub_lhs, ub_rhs, "ub");
  if (maximize && static_cast<int>(objective.size()) != num_vars)
    throw DimensionMismatch("objective width != num_vars");
  if (!nonneg.empty() && static_cast<int>(nonneg.size()) != num_vars)
    throw DimensionMismatch("nonneg width != num_vars");
}

namespace {

bool lp_is_exact(const LinearProgram &lp) {
  for (const auto &row : lp.eq_lhs)
    if (!vec_is_exact(row)) return false;
  for (const auto &row : lp.ub_lhs)
    if (!vec_is_exact(row)) return false;
  if (!vec_is_exact(lp.eq_rhs) || !vec_is_exact(lp.ub_rhs)) return false;
  if (lp.maximize && !vec_is_exact(lp.objective)) return false;
  return true;
}

// Dense tableau simplex over Scalar.  Column layout:
//   [0, n_int)                  internal vars (free vars split into +/-)
//   [n_int, n_int + n_slack)    slacks of ub rows
//   [.., .. + n_art)            artificials
struct Tableau {
  int rows = 0;
  int cols = 0;  // without rhs
  Mat a;         // rows x (cols + 1), last column is rhs
  Vec cost;      // cols, current objective (maximization)
  Scalar cost_shift;
  std::vector<int> basis;      // per row: basic column
  bool exact = true;
  long pivots = 0;

  Scalar &rhs(int r) { return a[r][cols]; }

  int sgn(const Scalar &s) const { return exact ? s.sign() : s.sign_lenient(); }

  // Bland's rule: entering = lowest-index column with positive reduced cost.
  int entering() const {
    for (int j = 0; j < cols; ++j)
      if ((exact ? cost[j].sign() : cost[j].sign_lenient()) > 0) return j;
    return -1;
  }

  // Ratio test with Bland tie-break on the basic variable index.
  int leaving(int je) {
    int best = -1;
    Scalar best_ratio;
    for (int r = 0; r < rows; ++r) {
      if (sgn(a[r][je]) <= 0) continue;
      Scalar ratio = a[r][cols] / a[r][je];
      if (best < 0) {
        best = r;
        best_ratio = ratio;
        continue;
      }
      int c = sgn(ratio - best_ratio);
      if (c < 0 || (c == 0 && basis[r] < basis[best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int r, int je) {
    ++pivots;
    if (pivots > 200000) throw Error("simplex pivot limit exceeded");
    Scalar p = a[r][je];
    for (int c = 0; c <= cols; ++c) a[r][c] /= p;
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == r) continue;
      Scalar f = a[rr][je];
      if (sgn(f) == 0) continue;
      for (int c = 0; c <= cols; ++c) a[rr][c] -= f * a[r][c];
    }
    Scalar fc = cost[je];
    if (sgn(fc) != 0) {
      for (int c = 0; c < cols; ++c) cost[c] -= fc * a[r][c];
      cost_shift += fc * a[r][cols];
    }
    basis[r] = je;
  }

  // Runs Bland pivoting until optimal or unbounded.  Returns false on
  // unbounded.
  bool optimize() {
    for (;;) {
      int je = entering();
      if (je < 0) return true;
      int lr = leaving(je);
      if (lr < 0) return false;
      pivot(lr, je);
    }
  }
};

struct Standardized {
  Tableau t;
  // internal column -> (original var, sign); free vars appear twice
  std::vector<std::pair<int, int>> var_map;
  int n_int = 0;
  int n_slack = 0;
  int n_art = 0;
  std::vector<int> row_flip;   // +1/-1 per tableau row vs original row
  std::vector<int> row_kind;   // 0 = eq, 1 = ub; index into original rows
  std::vector<int> row_index;
};

Standardized build(const LinearProgram &lp) {
  Standardized s;
  s.t.exact = lp_is_exact(lp);
  const int n = lp.num_vars;
  for (int i = 0; i < n; ++i) {
    s.var_map.emplace_back(i, +1);
    if (!lp.var_nonneg(i)) s.var_map.emplace_back(i, -1);
  }
  s.n_int = static_cast<int>(s.var_map.size());
  const int m = static_cast<int>(lp.eq_lhs.size() + lp.ub_lhs.size());
  s.n_slack = static_cast<int>(lp.ub_lhs.size());

  // First pass: raw rows over internal columns, slacks appended.
  Mat rows(m, Vec(s.n_int + s.n_slack, Scalar(0)));
  Vec rhs(m, Scalar(0));
  int r = 0;
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i, ++r) {
    for (int c = 0; c < s.n_int; ++c) {
      auto [v, sg] = s.var_map[c];
      rows[r][c] = sg > 0 ? lp.eq_lhs[i][v] : -lp.eq_lhs[i][v];
    }
    rhs[r] = lp.eq_rhs[i];
    s.row_kind.push_back(0);
    s.row_index.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < lp.ub_lhs.size(); ++i, ++r) {
    for (int c = 0; c < s.n_int; ++c) {
      auto [v, sg] = s.var_map[c];
      rows[r][c] = sg > 0 ? lp.ub_lhs[i][v] : -lp.ub_lhs[i][v];
    }
    rows[r][s.n_int + static_cast<int>(i)] = Scalar(1);
    rhs[r] = lp.ub_rhs[i];
    s.row_kind.push_back(1);
    s.row_index.push_back(static_cast<int>(i));
  }

  // Normalize rhs >= 0 and assign a starting basis (slack or artificial).
  s.row_flip.assign(m, +1);
  std::vector<int> art_rows;
  std::vector<int> start_basis(m, -1);
  for (int i = 0; i < m; ++i) {
    int sg = s.t.exact ? rhs[i].sign() : rhs[i].sign_lenient();
    if (sg < 0) {
      s.row_flip[i] = -1;
      for (auto &e : rows[i]) e = -e;
      rhs[i] = -rhs[i];
    }
    bool slack_usable = s.row_kind[i] == 1 && s.row_flip[i] > 0;
    if (slack_usable)
      start_basis[i] = s.n_int + s.row_index[i];
    else
      art_rows.push_back(i);
  }
  s.n_art = static_cast<int>(art_rows.size());

  Tableau &t = s.t;
  t.rows = m;
  t.cols = s.n_int + s.n_slack + s.n_art;
  t.a.assign(m, Vec(t.cols + 1, Scalar(0)));
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < s.n_int + s.n_slack; ++c) t.a[i][c] = rows[i][c];
    t.a[i][t.cols] = rhs[i];
  }
  for (int j = 0; j < s.n_art; ++j) {
    t.a[art_rows[j]][s.n_int + s.n_slack + j] = Scalar(1);
    start_basis[art_rows[j]] = s.n_int + s.n_slack + j;
  }
  t.basis = start_basis;
  return s;
}

// Phase-1 cost: maximize -(sum of artificials); price out the basic ones.
void load_phase1_cost(Standardized &s) {
  Tableau &t = s.t;
  t.cost.assign(t.cols, Scalar(0));
  t.cost_shift = Scalar(0);
  for (int j = 0; j < s.n_art; ++j) t.cost[s.n_int + s.n_slack + j] = Scalar(-1);
  for (int r = 0; r < t.rows; ++r) {
    int b = t.basis[r];
    if (b >= s.n_int + s.n_slack) {
      // cost row currently has -1 at b; add the row once to clear it.
      for (int c = 0; c < t.cols; ++c) t.cost[c] += t.a[r][c];
      t.cost_shift += t.a[r][t.cols];
      t.cost[b] = Scalar(0);
    }
  }
  // The shift accumulated equals the sum of artificial levels; the phase-1
  // objective is its negation.
  t.cost_shift = -t.cost_shift;
}

Vec extract_witness(const Standardized &s, const LinearProgram &lp) {
  const Tableau &t = s.t;
  Vec internal(t.cols, Scalar(0));
  for (int r = 0; r < t.rows; ++r) internal[t.basis[r]] = t.a[r][t.cols];
  Vec x(lp.num_vars, Scalar(0));
  for (int c = 0; c < s.n_int; ++c) {
    auto [v, sg] = s.var_map[c];
    x[v] = sg > 0 ? x[v] + internal[c] : x[v] - internal[c];
  }
  return x;
}

// Farkas multipliers from the final phase-1 cost row, mapped back to the
// original row orientation.
void extract_farkas(const Standardized &s, const LinearProgram &lp, LpResult &out) {
  const Tableau &t = s.t;
  out.farkas_eq.assign(lp.eq_lhs.size(), Scalar(0));
  out.farkas_ub.assign(lp.ub_lhs.size(), Scalar(0));
  // y_r = c_init(r) - cbar(init_col(r)), with c_init = -1 for artificial
  // starting columns and 0 for slack starting columns.  Both cases reduce to
  // y_r = c_init - cost[col] since cost[] holds the reduced costs.
  int art_seen = 0;
  for (int r = 0; r < t.rows; ++r) {
    // Recover this row's initial basis column.
    bool slack_start = s.row_kind[r] == 1 && s.row_flip[r] > 0;
    int col;
    Scalar c_init(0);
    if (slack_start) {
      col = s.n_int + s.row_index[r];
    } else {
      col = s.n_int + s.n_slack + art_seen;
      ++art_seen;
      c_init = Scalar(-1);
    }
    // In the normalized system y A >= 0 and y b < 0 at the phase-1 optimum;
    // mapping through the row flips keeps ub multipliers nonnegative.
    Scalar y = c_init - t.cost[col];
    if (s.row_flip[r] < 0) y = -y;
    if (s.row_kind[r] == 0)
      out.farkas_eq[s.row_index[r]] = y;
    else
      out.farkas_ub[s.row_index[r]] = y;
  }
}

// Pivots leftover basic artificials out of the basis (they sit at level
// zero), drops redundant rows that are zero on every real column, then
// removes the artificial columns so phase 2 can never touch them.
void drop_artificials(Standardized &s) {
  Tableau &t = s.t;
  int first_art = s.n_int + s.n_slack;
  for (int r = 0; r < t.rows; ++r) {
    if (t.basis[r] < first_art) continue;
    for (int c = 0; c < first_art; ++c) {
      if (t.sgn(t.a[r][c]) != 0) {
        t.pivot(r, c);
        break;
      }
    }
  }
  Mat kept_rows;
  std::vector<int> kept_basis;
  for (int r = 0; r < t.rows; ++r) {
    if (t.basis[r] >= first_art) continue;  // redundant constraint
    Vec row(t.a[r].begin(), t.a[r].begin() + first_art);
    row.push_back(t.a[r][t.cols]);
    kept_rows.push_back(std::move(row));
    kept_basis.push_back(t.basis[r]);
  }
  t.a = std::move(kept_rows);
  t.basis = std::move(kept_basis);
  t.rows = static_cast<int>(t.a.size());
  t.cols = first_art;
  s.n_art = 0;
}

LpResult solve_impl(const LinearProgram &lp, bool want_objective) {
  lp.validate();
  Standardized s = build(lp);
  Tableau &t = s.t;
  LpResult out;
  out.certainty = t.exact ? Cert::Exact : Cert::Within;

  // Phase 1.
  load_phase1_cost(s);
  if (!t.optimize()) throw Error("internal: phase-1 simplex reported unbounded");
  Scalar art_total = -t.cost_shift;  // = sum of artificials at optimum
  int art_sign = t.exact ? art_total.sign() : art_total.sign_lenient();
  if (art_sign > 0) {
    out.status = LpStatus::Infeasible;
    extract_farkas(s, lp, out);
    if (!verify_farkas(lp, out))
      throw Error("internal: Farkas certificate failed re-verification");
    return out;
  }

  drop_artificials(s);

  // Phase 2.
  if (want_objective && lp.maximize) {
    t.cost.assign(t.cols, Scalar(0));
    t.cost_shift = Scalar(0);
    for (int c = 0; c < s.n_int; ++c) {
      auto [v, sg] = s.var_map[c];
      t.cost[c] = sg > 0 ? lp.objective[v] : -lp.objective[v];
    }
    // Price out basics.
    for (int r = 0; r < t.rows; ++r) {
      int b = t.basis[r];
      Scalar cb = t.cost[b];
      if (t.sgn(cb) == 0) continue;
      for (int c = 0; c < t.cols; ++c) t.cost[c] -= cb * t.a[r][c];
      t.cost_shift += cb * t.a[r][t.cols];
    }
    if (!t.optimize()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
  }

  out.status = LpStatus::Optimal;
  out.witness = extract_witness(s, lp);
  if (want_objective && lp.maximize)
    out.optimum = dot(lp.objective, out.witness);
  else
    out.optimum = Scalar(0);
  if (!verify_witness(lp, out))
    throw Error("internal: simplex witness failed re-verification");
  return out;
}

}  // namespace

LpResult lp_solve(const LinearProgram &lp) { return solve_impl(lp, true); }

LpResult lp_feasible(const LinearProgram &lp) { return solve_impl(lp, false); }

bool verify_witness(const LinearProgram &lp, const LpResult &res) {
  if (res.status != LpStatus::Optimal) return false;
  if (static_cast<int>(res.witness.size()) != lp.num_vars) return false;
  Cert cert = Cert::Exact;
  try {
    for (size_t i = 0; i < lp.eq_lhs.size(); ++i) {
      if (cmp3(dot(lp.eq_lhs[i], res.witness), lp.eq_rhs[i], cert) != 0) return false;
    }
    for (size_t i = 0; i < lp.ub_lhs.size(); ++i) {
      if (cmp3(dot(lp.ub_lhs[i], res.witness), lp.ub_rhs[i], cert) > 0) return false;
    }
    for (int v = 0; v < lp.num_vars; ++v) {
      if (!lp.var_nonneg(v)) continue;
      Cert c2 = Cert::Exact;
      if (res.witness[v].certified_sign(c2) < 0) return false;
    }
  } catch (const Indeterminate &) {
    return false;
  }
  return true;
}

bool verify_farkas(const LinearProgram &lp, const LpResult &res) {
  if (res.status != LpStatus::Infeasible) return false;
  if (res.farkas_eq.size() != lp.eq_lhs.size()) return false;
  if (res.farkas_ub.size() != lp.ub_lhs.size()) return false;
  Cert cert = Cert::Exact;
  try {
    // q >= 0
    for (const auto &q : res.farkas_ub)
      if (q.certified_sign(cert) < 0) return false;
    // c := p A_eq + q A_ub must be >= 0 on nonneg vars, 0 on free vars.
    Vec combo(lp.num_vars, Scalar(0));
    for (size_t i = 0; i < lp.eq_lhs.size(); ++i)
      for (int v = 0; v < lp.num_vars; ++v) combo[v] += res.farkas_eq[i] * lp.eq_lhs[i][v];
    for (size_t i = 0; i < lp.ub_lhs.size(); ++i)
      for (int v = 0; v < lp.num_vars; ++v) combo[v] += res.farkas_ub[i] * lp.ub_lhs[i][v];
    for (int v = 0; v < lp.num_vars; ++v) {
      int sg = combo[v].certified_sign(cert);
      if (lp.var_nonneg(v) ? sg < 0 : sg != 0) return false;
    }
    // p . b_eq + q . b_ub < 0, strictly.
    Scalar total(0);
    for (size_t i = 0; i < lp.eq_rhs.size(); ++i) total += res.farkas_eq[i] * lp.eq_rhs[i];
    for (size_t i = 0; i < lp.ub_rhs.size(); ++i) total += res.farkas_ub[i] * lp.ub_rhs[i];
    return total.certified_sign(cert) < 0;
  } catch (const Indeterminate &) {
    return false;
  }
}

}  // namespace gptbox
