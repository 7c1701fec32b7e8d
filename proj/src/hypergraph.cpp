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

#include "gptbox/hypergraph.hpp"

#include <algorithm>

namespace gptbox {

namespace {

int diff_sign_with_slack(const Scalar &diff, const Rational &slack, Cert &cert) {
  if (diff.is_exact()) return diff.sign();
  cert = Cert::Within;
  Rational lo = diff.inf(), hi = diff.sup();
  if (lo > slack) return 1;
  if (hi < -slack) return -1;
  if (-slack <= lo && hi <= slack) return 0;
  throw Indeterminate("difference enclosure straddles the slack band");
}

}  // namespace

void Hypergraph::validate() const {
  if (edges.empty()) throw Error("hypergraph: no hyperedges");
  std::vector<int> covered(vertex_count(), 0);
  for (const auto &e : edges) {
    if (e.empty()) throw Error("hypergraph: empty hyperedge");
    std::vector<int> seen;
    for (int v : e) {
      if (v < 0 || v >= vertex_count()) throw Error("hypergraph: vertex index out of range");
      if (std::find(seen.begin(), seen.end(), v) != seen.end())
        throw Error("hypergraph: vertex repeated inside a hyperedge");
      seen.push_back(v);
      covered[v] = 1;
    }
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (!covered[v]) throw Error("hypergraph: vertex " + vertices[v] + " in no hyperedge");
}

void ContextualGame::validate() const {
  h->validate();
  if (question_dist.size() != h->edges.size())
    throw DimensionMismatch("contextual game: question distribution size");
  if (payoff_table.size() != h->edges.size())
    throw DimensionMismatch("contextual game: payoff rows");
  for (const auto &row : payoff_table)
    if (static_cast<int>(row.size()) != h->vertex_count())
      throw DimensionMismatch("contextual game: payoff row width");
  Cert cert = Cert::Exact;
  Scalar total(0);
  for (const auto &q : question_dist) {
    if (cmp3(q, Scalar(0), cert) < 0) throw Error("contextual game: negative question probability");
    total += q;
  }
  if (cmp3(total, Scalar(1), cert) != 0)
    throw Error("contextual game: question distribution not normalized");
}

Verdict is_probability_weight(const Vec &w, const Hypergraph &h, const Rational &slack) {
  h.validate();
  if (static_cast<int>(w.size()) != h.vertex_count())
    throw DimensionMismatch("probability weight: size != vertex count");
  Verdict v;
  v.certainty = vec_is_exact(w) ? Cert::Exact : Cert::Within;
  Cert cert = v.certainty;
  for (int i = 0; i < h.vertex_count(); ++i) {
    if (diff_sign_with_slack(w[i], slack, cert) < 0 ||
        diff_sign_with_slack(w[i] - Scalar(1), slack, cert) > 0) {
      v.holds = false;
      v.note = "weight of vertex " + h.vertices[i] + " outside [0,1]";
      v.certainty = cert;
      return v;
    }
  }
  for (size_t x = 0; x < h.edges.size(); ++x) {
    Scalar total(0);
    for (int vtx : h.edges[x]) total += w[vtx];
    if (diff_sign_with_slack(total - Scalar(1), slack, cert) != 0) {
      v.holds = false;
      v.note = "hyperedge " + std::to_string(x) + " sums to " + total.str();
      v.certainty = cert;
      return v;
    }
  }
  v.holds = true;
  v.certainty = cert;
  return v;
}

ProbabilityWeight make_probability_weight(HypergraphPtr h, Vec w) {
  Verdict v = is_probability_weight(w, *h);
  if (!v.holds) throw Error("not a probability weight: " + v.note);
  return ProbabilityWeight{std::move(h), std::move(w)};
}

WeightedGraph exclusivity_graph(const Hypergraph &h) {
  h.validate();
  WeightedGraph g;
  const int n = h.vertex_count();
  g.labels = h.vertices;
  g.weights.assign(n, Scalar(0));
  g.adj.assign(n, std::vector<bool>(n, false));
  for (const auto &e : h.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        g.adj[e[i]][e[j]] = true;
        g.adj[e[j]][e[i]] = true;
      }
  return g;
}

WeightedGraph attach_weights(WeightedGraph skeleton, const ProbabilityWeight &w) {
  if (static_cast<int>(w.w.size()) != skeleton.size())
    throw DimensionMismatch("attach_weights: size mismatch");
  skeleton.weights = w.w;
  return skeleton;
}

CeReport check_ce(const ProbabilityWeight &w, int k, long max_vertices, const Rational &slack,
                  bool exact_value) {
  if (k < 1) throw PreconditionError("check_ce: level must be >= 1");
  Verdict pw = is_probability_weight(w.w, *w.h, slack);
  if (!pw.holds) throw PreconditionError("check_ce: not a probability weight: " + pw.note);

  WeightedGraph base = attach_weights(exclusivity_graph(*w.h), w);
  // Zero-weight vertices are pruned inside the clique search.
  WeightedGraph g = disjunctive_power(base, k, max_vertices);
  std::optional<Scalar> stop;
  if (!exact_value) stop = Scalar(1);
  Rational gap = vec_is_exact(g.weights) ? Rational(0) : slack / Rational(2);
  CliqueResult clique = max_weight_clique(g, stop, gap);

  CeReport rep;
  rep.level = k;
  rep.max_clique_value = clique.value;
  rep.certainty = clique.certainty;
  rep.value_is_lower_bound = clique.early_stopped;
  long nbase = base.size();
  for (int v : clique.clique) {
    long idx = v;
    std::vector<int> digits(k);
    for (int c = k - 1; c >= 0; --c) {
      digits[c] = static_cast<int>(idx % nbase);
      idx /= nbase;
    }
    rep.witness.push_back(std::move(digits));
  }

  const Scalar &val = clique.value;
  if (val.is_exact()) {
    Cert cert = rep.certainty;
    rep.satisfied = cmp3(val, Scalar(1), cert) <= 0;
  } else {
    Rational lo = val.inf(), hi = val.sup();
    if (hi <= Rational(1))
      rep.satisfied = true;
    else if (lo > Rational(1))
      rep.satisfied = false;
    else if (hi <= Rational(1) + slack)
      rep.satisfied = true;
    else
      throw Indeterminate("CE clique value enclosure straddles 1 beyond the slack");
  }
  return rep;
}

EffectValuedWeight make_effect_valued_weight(HypergraphPtr h, SystemPtr sys,
                                             std::vector<Effect> assignment) {
  h->validate();
  if (static_cast<int>(assignment.size()) != h->vertex_count())
    throw DimensionMismatch("effect-valued weight: one effect per vertex required");
  for (const auto &e : assignment)
    if (!same_system(e.sys, assignment.front().sys) ||
        !same_system(e.sys, SystemPtr(sys)))
      throw SystemMismatch("effect-valued weight: effects on a different system");
  for (size_t x = 0; x < h->edges.size(); ++x) {
    std::vector<Effect> edge_effects;
    for (int v : h->edges[x]) edge_effects.push_back(assignment[v]);
    if (!is_measurement(edge_effects))
      throw Error("effect-valued weight: hyperedge " + std::to_string(x) +
                  " is not a measurement");
  }
  return EffectValuedWeight{std::move(h), std::move(sys), std::move(assignment)};
}

ProbabilityWeight weight_from_model(const EffectValuedWeight &evw, const State &rho) {
  if (!same_system(rho.sys, evw.sys))
    throw SystemMismatch("weight_from_model: state on a different system");
  if (!is_deterministic(rho))
    throw PreconditionError("weight_from_model: state must be deterministic");
  Vec w;
  w.reserve(evw.assignment.size());
  for (const auto &e : evw.assignment) w.push_back(pair(e, rho));
  return make_probability_weight(evw.h, std::move(w));
}

Scalar payoff_contextual(const ContextualGame &g, const ProbabilityWeight &w) {
  g.validate();
  if (g.h->vertex_count() != static_cast<int>(w.w.size()) || g.h.get() != w.h.get())
    throw DimensionMismatch("payoff_contextual: game and weight hypergraphs differ");
  Scalar total(0);
  for (int y = 0; y < g.h->vertex_count(); ++y) {
    Scalar c(0);
    for (size_t x = 0; x < g.h->edges.size(); ++x) c += g.question_dist[x] * g.payoff_table[x][y];
    total += c * w.w[y];
  }
  return total;
}

RncResult response_noncontextual_check(const Mat &per_edge_tables, HypergraphPtr h,
                                       const Rational &slack) {
  h->validate();
  if (per_edge_tables.size() != h->edges.size())
    throw DimensionMismatch("response_noncontextual_check: one table row per hyperedge");
  Cert cert = Cert::Exact;
  for (size_t x = 0; x < h->edges.size(); ++x) {
    if (per_edge_tables[x].size() != h->edges[x].size())
      throw DimensionMismatch("response_noncontextual_check: row width != edge size");
    Scalar total(0);
    for (const auto &p : per_edge_tables[x]) {
      if (cmp3(p, Scalar(0), cert) < 0)
        throw Error("response_noncontextual_check: negative probability");
      total += p;
    }
    if (diff_sign_with_slack(total - Scalar(1), slack, cert) != 0)
      throw Error("response_noncontextual_check: edge " + std::to_string(x) +
                  " not normalized");
  }

  RncResult out;
  out.verdict.certainty = cert;
  Vec w(h->vertex_count(), Scalar(0));
  std::vector<int> assigned(h->vertex_count(), 0);
  for (size_t x = 0; x < h->edges.size(); ++x) {
    for (size_t pos = 0; pos < h->edges[x].size(); ++pos) {
      int v = h->edges[x][pos];
      const Scalar &p = per_edge_tables[x][pos];
      if (!assigned[v]) {
        w[v] = p;
        assigned[v] = 1;
      } else if (diff_sign_with_slack(p - w[v], slack, cert) != 0) {
        out.verdict.holds = false;
        out.verdict.certainty = cert;
        out.verdict.note = "vertex " + h->vertices[v] + " has conflicting probabilities (" +
                           w[v].str() + " vs " + p.str() + " in edge " + std::to_string(x) + ")";
        return out;
      }
    }
  }
  out.verdict.holds = true;
  out.verdict.certainty = cert;
  out.weight = ProbabilityWeight{h, std::move(w)};
  return out;
}

}  // namespace gptbox
