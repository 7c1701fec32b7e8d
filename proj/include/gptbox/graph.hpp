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

#ifndef GPTBOX_GRAPH_HPP
#define GPTBOX_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "gptbox/scalar.hpp"

namespace gptbox {

/// Vertex-weighted simple graph; the edge relation is the orthogonality or
/// exclusivity relation of the hierarchy checkers.
struct WeightedGraph {
  std::vector<std::string> labels;
  Vec weights;
  std::vector<std::vector<bool>> adj;

  int size() const { return static_cast<int>(weights.size()); }
  /// Symmetry, no self-loops, nonnegative weights.
  void validate() const;
};

struct CliqueResult {
  Scalar value;             // maximum clique weight (enclosure when inexact)
  std::vector<int> clique;  // a maximizing clique (deterministic)
  bool early_stopped = false;
  int zero_pruned = 0;  // vertices dropped before the search
  Cert certainty = Cert::Exact;
};

/// Exact branch-and-bound maximum-weight clique.  Vertices are searched in
/// non-increasing weight order with residual-sum and greedy-coloring bounds;
/// all pruning decisions are certified, so the optimum is exact for exact
/// weights and a true enclosure for interval weights.  If early_stop is set,
/// the search returns as soon as some clique certifiably exceeds it.
/// A positive prune_gap abandons branches that cannot beat the incumbent by
/// more than the gap; the reported enclosure is widened by the gap, which
/// keeps it a true bound (used to collapse interval-weight plateaus).
CliqueResult max_weight_clique(const WeightedGraph &g,
                               const std::optional<Scalar> &early_stop = std::nullopt,
                               const Rational &prune_gap = Rational(0));

/// Disjunctive (co-normal) product: vertices are pairs, weights multiply,
/// and (u,v) ~ (u',v') iff u ~ u' in the first factor or v ~ v' in the
/// second (equal coordinates contribute no edge).
WeightedGraph disjunctive_product(const WeightedGraph &a, const WeightedGraph &b);

/// k-fold disjunctive power.  Throws ResourceCapExceeded when size()^k
/// exceeds max_vertices.
WeightedGraph disjunctive_power(const WeightedGraph &g, int k, long max_vertices = 1000000);

}  // namespace gptbox

#endif  // GPTBOX_GRAPH_HPP
