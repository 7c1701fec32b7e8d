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

#include "gptbox/gpt.hpp"

#include <algorithm>

#include "gptbox/linprog.hpp"

namespace gptbox {

bool GptSystem::is_exact() const {
  for (const auto &row : pure_states)
    if (!vec_is_exact(row)) return false;
  for (const auto &row : effect_generators)
    if (!vec_is_exact(row)) return false;
  return vec_is_exact(unit);
}

void GptSystem::validate() const {
  if (dim <= 0) throw Error(name + ": dimension must be positive");
  if (static_cast<int>(unit.size()) != dim) throw DimensionMismatch(name + ": unit width");
  for (const auto &v : pure_states)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch(name + ": pure state width");
  for (const auto &v : effect_generators)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch(name + ": generator width");
  if (pure_states.empty()) throw Error(name + ": no pure states");

  Cert cert = Cert::Exact;
  for (const auto &phi : pure_states) {
    if (cmp3(dot(unit, phi), Scalar(1), cert) != 0)
      throw Error(name + ": unit effect does not give 1 on a pure state");
  }
  for (const auto &g : effect_generators) {
    for (const auto &phi : pure_states) {
      if (cmp3(dot(g, phi), Scalar(0), cert) < 0)
        throw Error(name + ": effect generator negative on a pure state");
    }
  }
  if (!effect_generators.empty()) {
    // u must be reachable as a conic combination of the generators.
    LinearProgram lp(static_cast<int>(effect_generators.size()));
    for (int c = 0; c < dim; ++c) {
      Vec row(effect_generators.size());
      for (size_t g = 0; g < effect_generators.size(); ++g) row[g] = effect_generators[g][c];
      lp.add_eq(std::move(row), unit[c]);
    }
    if (lp_feasible(lp).status != LpStatus::Optimal)
      throw Error(name + ": unit effect not in the cone of effect generators");
  }
}

bool same_system(const SystemPtr &a, const SystemPtr &b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->name != b->name || a->dim != b->dim || a->field_k != b->field_k) return false;
  auto mats_equal = [](const Mat &x, const Mat &y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].size() != y[i].size()) return false;
      for (size_t j = 0; j < x[i].size(); ++j)
        if (!x[i][j].identical(y[i][j])) return false;
    }
    return true;
  };
  return mats_equal(a->pure_states, b->pure_states) &&
         mats_equal(a->effect_generators, b->effect_generators) &&
         mats_equal({a->unit}, {b->unit});
}

State make_state(SystemPtr sys, Vec coords) {
  if (static_cast<int>(coords.size()) != sys->dim) throw DimensionMismatch("state width");
  return State{std::move(sys), std::move(coords)};
}

Effect make_effect(SystemPtr sys, Vec coords) {
  if (static_cast<int>(coords.size()) != sys->dim) throw DimensionMismatch("effect width");
  return Effect{std::move(sys), std::move(coords)};
}

Scalar pair(const Effect &e, const State &s) {
  if (!same_system(e.sys, s.sys)) throw SystemMismatch("pair: effect and state on different systems");
  return dot(e.coords, s.coords);
}

bool is_deterministic(const State &s) {
  Cert cert = Cert::Exact;
  return cmp3(dot(s.sys->unit, s.coords), Scalar(1), cert) == 0;
}

SystemPtr tensor_system(const SystemPtr &a, const SystemPtr &b) {
  long ka = a->field_k, kb = b->field_k;
  long k;
  if (ka == 1) k = kb;
  else if (kb == 1 || ka == kb) k = ka;
  else
    throw FieldMismatch("tensor of systems over Q(sqrt(" + std::to_string(ka) + ")) and Q(sqrt(" +
                        std::to_string(kb) + "))");
  auto sys = std::make_shared<GptSystem>();
  sys->name = a->name + "*" + b->name;
  sys->dim = a->dim * b->dim;
  sys->field_k = k;
  sys->mode = (a->mode == EffectMode::Generated || b->mode == EffectMode::Generated)
                  ? EffectMode::Generated
                  : EffectMode::NoRestriction;
  for (const auto &x : a->pure_states)
    for (const auto &y : b->pure_states) sys->pure_states.push_back(kron(x, y));
  for (const auto &x : a->effect_generators)
    for (const auto &y : b->effect_generators) sys->effect_generators.push_back(kron(x, y));
  sys->unit = kron(a->unit, b->unit);
  return sys;
}

State tensor_state(const State &a, const State &b, SystemPtr product) {
  return make_state(std::move(product), kron(a.coords, b.coords));
}

Effect tensor_effect(const Effect &a, const Effect &b, SystemPtr product) {
  return make_effect(std::move(product), kron(a.coords, b.coords));
}

Measurement coarse_grain(const Measurement &m, const std::vector<std::vector<int>> &partition) {
  const int n = static_cast<int>(m.effects.size());
  std::vector<int> seen(n, 0);
  for (const auto &block : partition) {
    if (block.empty()) throw Error("coarse_grain: empty block");
    for (int idx : block) {
      if (idx < 0 || idx >= n) throw Error("coarse_grain: outcome index out of range");
      if (seen[idx]++) throw Error("coarse_grain: outcome repeated across blocks");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Error("coarse_grain: outcome not covered by the partition");

  Measurement out;
  out.sys = m.sys;
  for (const auto &block : partition) {
    Vec sum(m.sys->dim, Scalar(0));
    std::string label;
    for (int idx : block) {
      for (int c = 0; c < m.sys->dim; ++c) sum[c] += m.effects[idx].coords[c];
      if (!m.labels.empty()) label += (label.empty() ? "" : "+") + m.labels[idx];
    }
    out.effects.push_back(make_effect(m.sys, std::move(sum)));
    out.labels.push_back(label);
  }
  return out;
}

bool is_valid_effect(const Effect &e) {
  Cert cert = Cert::Exact;
  for (const auto &phi : e.sys->pure_states) {
    Scalar p = dot(e.coords, phi);
    if (cmp3(p, Scalar(0), cert) < 0) return false;
    if (cmp3(p, Scalar(1), cert) > 0) return false;
  }
  if (e.sys->mode == EffectMode::Generated) {
    const auto &gens = e.sys->effect_generators;
    LinearProgram lp(static_cast<int>(gens.size()));
    for (int c = 0; c < e.sys->dim; ++c) {
      Vec row(gens.size());
      for (size_t g = 0; g < gens.size(); ++g) row[g] = gens[g][c];
      lp.add_eq(std::move(row), e.coords[c]);
    }
    if (lp_feasible(lp).status != LpStatus::Optimal) return false;
  }
  return true;
}

bool is_measurement(const std::vector<Effect> &effects) {
  if (effects.empty()) return false;
  const auto &sys = effects.front().sys;
  Vec sum(sys->dim, Scalar(0));
  for (const auto &e : effects) {
    if (!same_system(e.sys, sys)) throw SystemMismatch("is_measurement: mixed systems");
    if (!is_valid_effect(e)) return false;
    for (int c = 0; c < sys->dim; ++c) sum[c] += e.coords[c];
  }
  Cert cert = Cert::Exact;
  for (int c = 0; c < sys->dim; ++c)
    if (cmp3(sum[c], sys->unit[c], cert) != 0) return false;
  return true;
}

void validate_ensemble(const Ensemble &ens) {
  Scalar total(0);
  for (const auto &s : ens.states) {
    if (!same_system(s.sys, ens.sys)) throw SystemMismatch("ensemble: mixed systems");
    total += dot(ens.sys->unit, s.coords);
  }
  Cert cert = Cert::Exact;
  if (cmp3(total, Scalar(1), cert) != 0)
    throw Error("ensemble masses do not sum to 1 (got " + total.str() + ")");
}

bool state_in_cone(const State &s) {
  const auto &gens = s.sys->pure_states;
  LinearProgram lp(static_cast<int>(gens.size()));
  for (int c = 0; c < s.sys->dim; ++c) {
    Vec row(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) row[g] = gens[g][c];
    lp.add_eq(std::move(row), s.coords[c]);
  }
  return lp_feasible(lp).status == LpStatus::Optimal;
}

bool has_unique_unit(const GptSystem &sys) { return rank(sys.pure_states) == sys.dim; }

}  // namespace gptbox
