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

#include "gptbox/deciders.hpp"

#include <algorithm>

#include "gptbox/linprog.hpp"

namespace gptbox {

namespace {

Cert system_cert(const GptSystem &sys) { return sys.is_exact() ? Cert::Exact : Cert::Within; }

void require_nonempty(const std::vector<Effect> &v, const char *who) {
  if (v.empty()) throw PreconditionError(std::string(who) + ": empty input set");
}

void require_same_system(const std::vector<Effect> &v) {
  for (const auto &e : v)
    if (!same_system(e.sys, v.front().sys)) throw SystemMismatch("effects on different systems");
}

void require_same_system_states(const std::vector<State> &v) {
  for (const auto &s : v)
    if (!same_system(s.sys, v.front().sys)) throw SystemMismatch("states on different systems");
}

// Nonzero v with rows . v = 0, when the nullity is exactly one.
std::optional<Vec> nullspace_dir(Mat rows, int cols) {
  // Reduced row echelon form with lenient pivoting.
  int rk = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && rk < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rk; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].sign_lenient() != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rk]);
    Scalar p = rows[rk][col];
    for (int c = col; c < cols; ++c) rows[rk][c] /= p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rk) continue;
      Scalar f = rows[r][col];
      if (f.sign_lenient() == 0 && f.is_exact()) continue;
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[rk][c];
    }
    pivot_col.push_back(col);
    ++rk;
  }
  if (rk != cols - 1) return std::nullopt;
  int free_col = 0;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  }
  Vec v(cols, Scalar(0));
  v[free_col] = Scalar(1);
  for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -rows[r][free_col];
  return v;
}

// LP helper: variables describing one unknown effect of the system.
struct EffectSpace {
  const GptSystem &sys;
  bool generated;

  explicit EffectSpace(const GptSystem &s)
      : sys(s), generated(s.mode == EffectMode::Generated) {}

  int nvars() const {
    return generated ? static_cast<int>(sys.effect_generators.size()) : sys.dim;
  }
  bool vars_nonneg() const { return generated; }

  // Row such that row . vars == (effect | state).
  Vec pairing_row(const Vec &state) const {
    if (!generated) return state;
    Vec row(sys.effect_generators.size());
    for (size_t g = 0; g < row.size(); ++g) row[g] = dot(sys.effect_generators[g], state);
    return row;
  }

  Vec coords_from(const Vec &vars) const {
    if (!generated) return vars;
    Vec coords(sys.dim, Scalar(0));
    for (size_t g = 0; g < vars.size(); ++g)
      for (int c = 0; c < sys.dim; ++c) coords[c] += vars[g] * sys.effect_generators[g][c];
    return coords;
  }

  // Validity: (effect|phi) <= 1 for every pure state; the lower bound is
  // explicit only when coordinates are free variables.
  void add_validity(LinearProgram &lp, int offset = 0) const {
    for (const auto &phi : sys.pure_states) {
      Vec base = pairing_row(phi);
      Vec row(lp.num_vars, Scalar(0));
      for (int i = 0; i < nvars(); ++i) row[offset + i] = base[i];
      lp.add_ub(row, Scalar(1));
      if (!generated) {
        Vec neg(lp.num_vars, Scalar(0));
        for (int i = 0; i < nvars(); ++i) neg[offset + i] = -base[i];
        lp.add_ub(neg, Scalar(0));  // (effect|phi) >= 0
      }
    }
  }
};

// Conic membership: target in cone(rays)?
LpResult cone_membership(const Mat &rays, const Vec &target) {
  LinearProgram lp(static_cast<int>(rays.size()));
  const int dim = static_cast<int>(target.size());
  for (int c = 0; c < dim; ++c) {
    Vec row(rays.size());
    for (size_t g = 0; g < rays.size(); ++g) row[g] = rays[g][c];
    lp.add_eq(std::move(row), target[c]);
  }
  return lp_feasible(lp);
}

}  // namespace

Mat derive_effect_generators(const GptSystem &sys) {
  if (sys.dim > 4)
    throw PreconditionError(sys.name +
                            ": facet enumeration is limited to dimension <= 4; "
                            "list effect_generators explicitly");
  if (rank(sys.pure_states) != sys.dim)
    throw PreconditionError(sys.name + ": pure states do not span the ambient space");

  // Dedupe states on the same ray first.
  Mat states;
  for (const auto &s : sys.pure_states) {
    bool dup = false;
    for (const auto &t : states) dup = dup || same_ray(s, t);
    if (!dup) states.push_back(s);
  }

  Mat rays;
  const int need = sys.dim - 1;
  std::vector<int> sel;
  auto consider = [&]() {
    Mat rows;
    for (int i : sel) rows.push_back(states[i]);
    if (rank(rows) != need) return;
    auto dir = nullspace_dir(rows, sys.dim);
    if (!dir) return;
    // Orient: nonnegative on every pure state, else flip, else discard.
    int pos = 0, neg = 0;
    for (const auto &phi : sys.pure_states) {
      int sg = dot(*dir, phi).sign_lenient();
      if (sg > 0) ++pos;
      if (sg < 0) ++neg;
    }
    if (pos && neg) return;
    Vec ray = *dir;
    if (neg)
      for (auto &x : ray) x = -x;
    for (const auto &r : rays)
      if (same_ray(r, ray)) return;
    rays.push_back(std::move(ray));
  };
  auto rec = [&](auto &&self, int start) -> void {
    if (static_cast<int>(sel.size()) == need) {
      consider();
      return;
    }
    for (int i = start; i < static_cast<int>(states.size()); ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  if (need > 0) rec(rec, 0);
  if (rays.empty()) throw Error(sys.name + ": facet enumeration found no effect rays");
  return rays;
}

Mat effect_rays_for(const GptSystem &sys) {
  if (!sys.effect_generators.empty()) return sys.effect_generators;
  return derive_effect_generators(sys);
}

Verdict is_pure_effect(const Effect &e) {
  const GptSystem &sys = *e.sys;
  Verdict v;
  v.certainty = system_cert(sys);
  if (!vec_is_exact(e.coords)) v.certainty = Cert::Within;

  if (is_zero_vec(e.coords)) {
    v.holds = false;
    v.note = "zero effect (cone apex, not an extreme ray)";
    return v;
  }
  Mat rays = effect_rays_for(sys);
  if (cone_membership(rays, e.coords).status != LpStatus::Optimal) {
    v.holds = false;
    v.note = "effect is not in the cone spanned by the effect generators";
    return v;
  }
  Mat nonparallel;
  for (const auto &r : rays)
    if (!same_ray(r, e.coords)) nonparallel.push_back(r);
  if (nonparallel.size() == rays.size()) {
    // Not on a listed ray at all: expressible by the full set but by no
    // proper exclusion means it is interior unless it matches a ray.
    v.holds = false;
    v.note = "effect is a nontrivial conic combination of generators";
    return v;
  }
  auto res = cone_membership(nonparallel, e.coords);
  v.holds = res.status == LpStatus::Infeasible;
  if (!v.holds) v.note = "coarse-graining found: conic combination avoiding the parallel ray";
  return v;
}

Verdict are_biorthogonal(const std::vector<Effect> &effects, const std::vector<State> &states) {
  if (effects.size() != states.size())
    throw DimensionMismatch("are_biorthogonal: list lengths differ");
  require_nonempty(effects, "are_biorthogonal");
  require_same_system(effects);
  require_same_system_states(states);
  Verdict v;
  v.certainty = system_cert(*effects.front().sys);
  Cert cert = v.certainty;
  for (size_t y = 0; y < effects.size(); ++y) {
    for (size_t yp = 0; yp < states.size(); ++yp) {
      Scalar p = pair(effects[y], states[yp]);
      int want = (y == yp) ? 1 : 0;
      if (cmp3(p, Scalar(want), cert) != 0) {
        v.holds = false;
        v.note = "pairing (" + std::to_string(y) + "|" + std::to_string(yp) + ") = " + p.str();
        v.certainty = cert;
        return v;
      }
    }
  }
  v.holds = true;
  v.certainty = cert;
  return v;
}

Verdict is_orthogonal_effect_set(const std::vector<Effect> &effects) {
  require_nonempty(effects, "is_orthogonal_effect_set");
  require_same_system(effects);
  const GptSystem &sys = *effects.front().sys;
  const auto &pure = sys.pure_states;
  const int P = static_cast<int>(pure.size());

  Verdict v;
  v.certainty = system_cert(sys);
  // Per index y: a state in the polytope with (m_y|rho)=1, (m_y'|rho)=0.
  for (size_t y = 0; y < effects.size(); ++y) {
    LinearProgram lp(P);
    for (size_t yp = 0; yp < effects.size(); ++yp) {
      Vec row(P);
      for (int p = 0; p < P; ++p) row[p] = dot(effects[yp].coords, pure[p]);
      lp.add_eq(std::move(row), Scalar(yp == y ? 1 : 0));
    }
    Vec norm(P);
    for (int p = 0; p < P; ++p) norm[p] = dot(sys.unit, pure[p]);
    lp.add_eq(std::move(norm), Scalar(1));
    auto res = lp_feasible(lp);
    v.certainty = meet(v.certainty, res.certainty);
    if (res.status != LpStatus::Optimal) {
      v.holds = false;
      v.note = "no state is selected by effect " + std::to_string(y);
      return v;
    }
    Vec state(sys.dim, Scalar(0));
    for (int p = 0; p < P; ++p)
      for (int c = 0; c < sys.dim; ++c) state[c] += res.witness[p] * pure[p][c];
    v.witness_states.push_back(std::move(state));
  }
  v.holds = true;
  return v;
}

Verdict are_states_orthogonal(const std::vector<State> &states) {
  if (states.empty()) throw PreconditionError("are_states_orthogonal: empty input set");
  require_same_system_states(states);
  const GptSystem &sys = *states.front().sys;
  EffectSpace space(sys);

  Verdict v;
  v.certainty = system_cert(sys);
  for (size_t y = 0; y < states.size(); ++y) {
    LinearProgram lp(space.nvars());
    lp.nonneg.assign(space.nvars(), space.vars_nonneg());
    for (size_t yp = 0; yp < states.size(); ++yp)
      lp.add_eq(space.pairing_row(states[yp].coords), Scalar(yp == y ? 1 : 0));
    space.add_validity(lp);
    auto res = lp_feasible(lp);
    v.certainty = meet(v.certainty, res.certainty);
    if (res.status != LpStatus::Optimal) {
      v.holds = false;
      v.note = "no valid effect selects state " + std::to_string(y);
      return v;
    }
    v.witness_effects.push_back(space.coords_from(res.witness));
  }
  v.holds = true;
  return v;
}

Verdict perfectly_distinguishable(const std::vector<State> &states) {
  if (states.empty()) throw PreconditionError("perfectly_distinguishable: empty input set");
  require_same_system_states(states);
  const GptSystem &sys = *states.front().sys;
  for (const auto &s : states)
    if (!is_deterministic(s))
      throw PreconditionError("perfectly_distinguishable: states must be deterministic");
  EffectSpace space(sys);
  const int N = static_cast<int>(states.size());
  const int nv = space.nvars();

  // One block of unknowns per discriminating effect.
  LinearProgram lp(N * nv);
  lp.nonneg.assign(N * nv, space.vars_nonneg());

  // Sum of the effects is the unit.
  for (int c = 0; c < sys.dim; ++c) {
    Vec row(N * nv, Scalar(0));
    for (int y = 0; y < N; ++y) {
      if (!space.generated) {
        row[y * nv + c] = Scalar(1);
      } else {
        for (int g = 0; g < nv; ++g) row[y * nv + g] = sys.effect_generators[g][c];
      }
    }
    lp.add_eq(std::move(row), sys.unit[c]);
  }
  // Delta pairings.
  for (int y = 0; y < N; ++y) {
    for (int yp = 0; yp < N; ++yp) {
      Vec base = space.pairing_row(states[yp].coords);
      Vec row(N * nv, Scalar(0));
      for (int i = 0; i < nv; ++i) row[y * nv + i] = base[i];
      lp.add_eq(std::move(row), Scalar(y == yp ? 1 : 0));
    }
  }
  // Positivity of each effect on every pure state (validity's upper half
  // follows from the unit-sum constraint and the positivity of the others).
  if (!space.generated) {
    for (int y = 0; y < N; ++y) {
      for (const auto &phi : sys.pure_states) {
        Vec row(N * nv, Scalar(0));
        for (int c = 0; c < sys.dim; ++c) row[y * nv + c] = -phi[c];
        lp.add_ub(std::move(row), Scalar(0));
      }
    }
  }

  auto res = lp_feasible(lp);
  Verdict v;
  v.certainty = meet(system_cert(sys), res.certainty);
  v.holds = res.status == LpStatus::Optimal;
  if (v.holds) {
    for (int y = 0; y < N; ++y) {
      Vec slice(res.witness.begin() + y * nv, res.witness.begin() + (y + 1) * nv);
      v.witness_effects.push_back(space.coords_from(slice));
    }
  } else {
    v.note = "no single measurement discriminates the set";
  }
  return v;
}

Verdict sufficient_orthogonality(const std::vector<Effect> &effects) {
  require_nonempty(effects, "sufficient_orthogonality");
  require_same_system(effects);
  const GptSystem &sys = *effects.front().sys;

  Cert cert = system_cert(sys);
  for (size_t i = 0; i < effects.size(); ++i) {
    Verdict pv = is_pure_effect(effects[i]);
    cert = meet(cert, pv.certainty);
    if (!pv.holds)
      throw ImpureInput("sufficient_orthogonality: effect " + std::to_string(i) +
                        " is not pure (" + pv.note + ")");
  }
  Verdict ortho = is_orthogonal_effect_set(effects);
  cert = meet(cert, ortho.certainty);
  if (!ortho.holds)
    throw NonOrthogonalInput("sufficient_orthogonality: the set is not orthogonal (" +
                             ortho.note + ")");

  Vec rest(sys.dim, Scalar(0));
  for (int c = 0; c < sys.dim; ++c) {
    rest[c] = sys.unit[c];
    for (const auto &e : effects) rest[c] -= e.coords[c];
  }
  Effect rest_effect = make_effect(effects.front().sys, rest);

  Verdict v;
  v.certainty = cert;
  bool ok = is_valid_effect(rest_effect);
  if (ok && sys.mode == EffectMode::Generated)
    ok = cone_membership(sys.effect_generators, rest).status == LpStatus::Optimal;
  v.holds = ok;
  v.note = sys.mode == EffectMode::Generated ? "mode=generated" : "mode=no-restriction";
  if (ok) {
    for (const auto &e : effects) v.witness_effects.push_back(e.coords);
    if (!is_zero_vec(rest)) v.witness_effects.push_back(rest);
  } else {
    // Exhibit a pure state where the total probability would exceed one.
    for (const auto &phi : sys.pure_states) {
      if (dot(rest, phi).sign_lenient() < 0) {
        v.witness_states.push_back(phi);
        Scalar total = Scalar(1) - dot(rest, phi);
        v.note += "; total probability " + total.str() + " > 1 on the witness state";
        break;
      }
    }
  }
  return v;
}

Verdict mutually_exclusive(const std::vector<Effect> &effects) {
  require_nonempty(effects, "mutually_exclusive");
  require_same_system(effects);
  const GptSystem &sys = *effects.front().sys;
  Verdict v;
  v.certainty = system_cert(sys);
  for (const auto &e : effects)
    if (!is_valid_effect(e)) throw PreconditionError("mutually_exclusive: invalid effect");

  for (size_t i = 0; i < effects.size(); ++i) {
    for (size_t j = i + 1; j < effects.size(); ++j) {
      Vec rest(sys.dim, Scalar(0));
      for (int c = 0; c < sys.dim; ++c)
        rest[c] = sys.unit[c] - effects[i].coords[c] - effects[j].coords[c];
      bool ok = is_valid_effect(make_effect(effects.front().sys, rest));
      if (ok && sys.mode == EffectMode::Generated)
        ok = cone_membership(sys.effect_generators, rest).status == LpStatus::Optimal;
      if (!ok) {
        v.holds = false;
        v.note = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                 ") admits no joint measurement";
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

Verdict coexist_mutually_exclusive_spiky(
    const std::vector<Effect> &effects,
    const std::vector<std::vector<Effect>> &decompositions) {
  require_nonempty(effects, "coexist_mutually_exclusive_spiky");
  require_same_system(effects);
  const GptSystem &sys = *effects.front().sys;
  Cert cert = system_cert(sys);

  for (size_t i = 0; i < effects.size(); ++i) {
    const bool declared = i < decompositions.size() && !decompositions[i].empty();
    if (declared) {
      Vec sum(sys.dim, Scalar(0));
      for (const auto &part : decompositions[i]) {
        Verdict pv = is_pure_effect(part);
        cert = meet(cert, pv.certainty);
        if (!pv.holds)
          throw NonSpikyInput("declared part of effect " + std::to_string(i) + " is not pure");
        for (int c = 0; c < sys.dim; ++c) sum[c] += part.coords[c];
      }
      Cert c2 = cert;
      for (int c = 0; c < sys.dim; ++c)
        if (cmp3(sum[c], effects[i].coords[c], c2) != 0)
          throw NonSpikyInput("declared parts of effect " + std::to_string(i) +
                              " do not sum to it");
      Verdict ov = is_orthogonal_effect_set(decompositions[i]);
      cert = meet(cert, ov.certainty);
      if (!ov.holds)
        throw NonSpikyInput("declared parts of effect " + std::to_string(i) +
                            " are not an orthogonal set");
    } else {
      Verdict pv = is_pure_effect(effects[i]);
      cert = meet(cert, pv.certainty);
      if (!pv.holds)
        throw NonSpikyInput("effect " + std::to_string(i) +
                            " is neither pure nor a declared coarse-graining");
      Verdict ov = is_orthogonal_effect_set({effects[i]});
      cert = meet(cert, ov.certainty);
      if (!ov.holds)
        throw NonSpikyInput("effect " + std::to_string(i) + " is not normalized");
    }
  }

  Vec rest(sys.dim, Scalar(0));
  for (int c = 0; c < sys.dim; ++c) {
    rest[c] = sys.unit[c];
    for (const auto &e : effects) rest[c] -= e.coords[c];
  }
  Verdict v;
  v.certainty = cert;
  bool ok = is_valid_effect(make_effect(effects.front().sys, rest));
  if (ok && sys.mode == EffectMode::Generated)
    ok = cone_membership(sys.effect_generators, rest).status == LpStatus::Optimal;
  v.holds = ok;
  if (ok) {
    for (const auto &e : effects) v.witness_effects.push_back(e.coords);
    if (!is_zero_vec(rest)) v.witness_effects.push_back(rest);
  } else {
    v.note = "the set does not complete to a single measurement";
  }
  return v;
}

Verdict identifies_pure_state(const Effect &e) {
  const GptSystem &sys = *e.sys;
  if (!is_valid_effect(e)) throw PreconditionError("identifies_pure_state: invalid effect");

  // Dedupe listed pure states that are the same point.
  Mat distinct;
  for (const auto &phi : sys.pure_states) {
    bool dup = false;
    for (const auto &q : distinct) {
      bool all = true;
      for (size_t c = 0; c < q.size(); ++c) all = all && (q[c] - phi[c]).sign_lenient() == 0;
      dup = dup || all;
    }
    if (!dup) distinct.push_back(phi);
  }

  Verdict v;
  v.certainty = system_cert(sys);
  if (!vec_is_exact(e.coords)) v.certainty = Cert::Within;
  Cert cert = v.certainty;
  Mat attaining;
  for (const auto &phi : distinct)
    if (cmp3(dot(e.coords, phi), Scalar(1), cert) == 0) attaining.push_back(phi);
  v.certainty = cert;
  if (attaining.empty())
    throw NotNormalized("identifies_pure_state: no state attains probability 1");
  v.holds = attaining.size() == 1;
  v.witness_states = attaining;
  if (!v.holds)
    v.note = std::to_string(attaining.size()) + " pure states attain probability 1";
  return v;
}

Verdict is_maximal_distinguishable_set(const std::vector<State> &states) {
  if (states.empty())
    throw PreconditionError("is_maximal_distinguishable_set: empty input set");
  require_same_system_states(states);
  const GptSystem &sys = *states.front().sys;

  Verdict base = perfectly_distinguishable(states);
  if (!base.holds)
    throw InputNotDistinguishable("is_maximal_distinguishable_set: input set is not "
                                  "perfectly distinguishable");
  Verdict v;
  v.certainty = base.certainty;

  Mat span_rows;
  for (const auto &s : states) span_rows.push_back(s.coords);
  int base_rank = rank(span_rows);

  for (const auto &phi : sys.pure_states) {
    Mat extended = span_rows;
    extended.push_back(phi);
    if (rank(extended) == base_rank) continue;  // in the span: can never extend
    std::vector<State> bigger = states;
    bigger.push_back(make_state(states.front().sys, phi));
    Verdict ext = perfectly_distinguishable(bigger);
    v.certainty = meet(v.certainty, ext.certainty);
    if (ext.holds) {
      v.holds = false;
      v.witness_states.push_back(phi);
      v.note = "the set extends by a listed pure state";
      return v;
    }
  }
  v.holds = true;
  return v;
}

Verdict is_extremal_effect(const Effect &e) {
  const GptSystem &sys = *e.sys;
  if (!is_valid_effect(e)) throw PreconditionError("is_extremal_effect: invalid effect");
  Verdict v;
  v.certainty = system_cert(sys);
  if (!vec_is_exact(e.coords)) v.certainty = Cert::Within;
  Cert cert = v.certainty;
  Mat tight;
  for (const auto &phi : sys.pure_states) {
    Scalar p = dot(e.coords, phi);
    if (cmp3(p, Scalar(0), cert) == 0 || cmp3(p, Scalar(1), cert) == 0) tight.push_back(phi);
  }
  v.certainty = cert;
  v.holds = !tight.empty() && rank(tight) == sys.dim;
  if (!v.holds) v.note = "tight constraints span rank " + std::to_string(tight.empty() ? 0 : rank(tight));
  return v;
}

Verdict is_sharp_pure_measurement(const Measurement &m) {
  if (m.effects.empty()) throw PreconditionError("is_sharp_pure_measurement: empty measurement");
  if (!is_measurement(m.effects))
    throw PreconditionError("is_sharp_pure_measurement: input is not a measurement");
  for (size_t i = 0; i < m.effects.size(); ++i) {
    Verdict pv = is_pure_effect(m.effects[i]);
    if (!pv.holds)
      throw PureOnly("is_sharp_pure_measurement: effect " + std::to_string(i) +
                     " is not pure; sharpness is only decidable for pure measurements");
  }
  Verdict v = is_orthogonal_effect_set(m.effects);
  if (v.holds)
    v.note = "sharp: repeatable via the measure-and-prepare test over the witness states";
  else
    v.note = "not orthogonal, hence not sharp";
  return v;
}

}  // namespace gptbox
