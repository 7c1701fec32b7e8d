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

#ifndef GPTBOX_HYPERGRAPH_HPP
#define GPTBOX_HYPERGRAPH_HPP

#include <memory>
#include <string>
#include <vector>

#include "gptbox/behavior.hpp"
#include "gptbox/deciders.hpp"
#include "gptbox/gpt.hpp"
#include "gptbox/graph.hpp"

namespace gptbox {

/// Test space: answers as vertices, questions as hyperedges.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  /// Every vertex in >= 1 edge, edges nonempty, indices in range.
  void validate() const;
};

using HypergraphPtr = std::shared_ptr<const Hypergraph>;

/// w: vertices -> [0,1] with unit sum on every hyperedge.
struct ProbabilityWeight {
  HypergraphPtr h;
  Vec w;
};

/// One effect per vertex whose restriction to each hyperedge is a
/// measurement; effect non-contextuality holds by construction.
struct EffectValuedWeight {
  HypergraphPtr h;
  SystemPtr sys;
  std::vector<Effect> assignment;
};

struct ContextualGame {
  HypergraphPtr h;
  Vec question_dist;  // q(x) per hyperedge
  Mat payoff_table;   // omega[x][y] per (edge, global vertex)
  void validate() const;
};

struct CeReport {
  int level = 1;
  bool satisfied = false;
  Scalar max_clique_value;
  std::vector<std::vector<int>> witness;  // mutually exclusive vertex strings
  Cert certainty = Cert::Exact;
  bool value_is_lower_bound = false;  // see LoReport
};

/// Range and per-edge normalization, exactly (within slack for intervals).
Verdict is_probability_weight(const Vec &w, const Hypergraph &h,
                              const Rational &slack = default_slack());

ProbabilityWeight make_probability_weight(HypergraphPtr h, Vec w);

/// Two vertices are adjacent iff some hyperedge contains both.  Weights are
/// left at zero; attach_weights installs them from a ProbabilityWeight.
WeightedGraph exclusivity_graph(const Hypergraph &h);

WeightedGraph attach_weights(WeightedGraph skeleton, const ProbabilityWeight &w);

/// CE at level k: max-weight clique of the k-fold disjunctive power of the
/// weighted exclusivity graph.
CeReport check_ce(const ProbabilityWeight &w, int k, long max_vertices = 1000000,
                  const Rational &slack = default_slack(), bool exact_value = true);

EffectValuedWeight make_effect_valued_weight(HypergraphPtr h, SystemPtr sys,
                                             std::vector<Effect> assignment);

/// w(y) = (w_hat(y) | rho).
ProbabilityWeight weight_from_model(const EffectValuedWeight &evw, const State &rho);

/// omega = sum_y c(y) w(y) with c(y) = sum_x q(x) omega(x, y).
Scalar payoff_contextual(const ContextualGame &g, const ProbabilityWeight &w);

/// Checks p(y|x) == p(y|x') on overlapping edges; on success extracts the
/// probability weight.  Input tables are indexed [edge][position in edge].
struct RncResult {
  Verdict verdict;
  ProbabilityWeight weight;  // valid when verdict.holds
};
RncResult response_noncontextual_check(const Mat &per_edge_tables, HypergraphPtr h,
                                       const Rational &slack = default_slack());

}  // namespace gptbox

#endif  // GPTBOX_HYPERGRAPH_HPP
