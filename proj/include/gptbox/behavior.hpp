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

#ifndef GPTBOX_BEHAVIOR_HPP
#define GPTBOX_BEHAVIOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "gptbox/deciders.hpp"
#include "gptbox/gpt.hpp"
#include "gptbox/graph.hpp"

namespace gptbox {

/// Input/output alphabet sizes of an N-party box.
struct Scenario {
  std::vector<int> inputs;   // |X_i| per party
  std::vector<int> outputs;  // |Y_i| per party

  int parties() const { return static_cast<int>(inputs.size()); }
  long input_count() const;
  long output_count() const;
  long flat_input(const std::vector<int> &x) const;
  long flat_output(const std::vector<int> &y) const;
  std::vector<int> unflatten_input(long idx) const;
  std::vector<int> unflatten_output(long idx) const;
  bool operator==(const Scenario &other) const = default;
};

/// Certificate attachable by a producer whose measurement operators
/// realize the table as products of (numerically) orthogonal projectors:
/// same-input, different-output factor operators have pairwise products of
/// norm at most orthogonality_defect, and each factor is idempotent within
/// idempotence_defect.  Under these facts, any locally orthogonal event set
/// at any level sums to at most 1 + n*d_idem + n^2*d_orth (n = set size),
/// which is the content of the pure-orthogonal-products derivation.
struct OrthogonalityCertificate {
  bool projective = false;
  double idempotence_defect = 0.0;
  double orthogonality_defect = 0.0;
};

/// Conditional distribution p(y|x), stored densely (input-major).
struct Behavior {
  Scenario sc;
  Vec table;
  std::optional<OrthogonalityCertificate> op_certificate;

  const Scalar &p(long x_flat, long y_flat) const { return table[x_flat * sc.output_count() + y_flat]; }
  Scalar &p(long x_flat, long y_flat) { return table[x_flat * sc.output_count() + y_flat]; }
  /// p >= 0 and per-input normalization; throws on violation.
  void validate() const;
};

/// An output/input pair.
struct Event {
  std::vector<int> x, y;
  std::string str() const;
};

struct NonlocalGame {
  Scenario sc;
  Vec input_dist;    // q(x), flat over inputs
  Vec payoff_table;  // omega(x, y), input-major
  void validate() const;
};

struct LoReport {
  int level = 1;
  bool satisfied = false;
  Scalar max_clique_value;
  std::vector<Event> witness;  // a maximizing locally-orthogonal set (per copy, concatenated)
  Cert certainty = Cert::Exact;
  /// Set when the search early-stopped at a violating clique: the value is a
  /// lower bound on the true maximum (enough to certify the violation).
  bool value_is_lower_bound = false;
  std::string note;
};

/// Default equality slack for float-derived (interval) tables: 1e-9.
Rational default_slack();

/// p(y|x) from a joint state and per-party, per-input measurements
/// (meas[i][x_i] acts on the i-th tensor factor).
Behavior behavior_from_model(const State &joint,
                             const std::vector<std::vector<Measurement>> &meas);

/// Expected payoff of the game under the behavior.
Scalar payoff(const NonlocalGame &g, const Behavior &b);

/// Marginal equality over every bipartition of the parties.  slack applies
/// only to interval-valued tables.
Verdict is_no_signalling(const Behavior &b, const Rational &slack = default_slack());

/// There is a party with equal inputs and different outputs.
bool locally_orthogonal(const Event &e, const Event &f);

/// Orthogonality graph of the events, weighted by p(e).  Zero-probability
/// events are pruned unless keep_zero_events.
WeightedGraph lo_graph(const Behavior &b, bool keep_zero_events = false);

/// LO at level k: max-weight clique of the k-fold disjunctive power with
/// product weights; satisfied iff the value is <= 1 (within slack for
/// interval tables).
/// When exact_value is false the clique search may stop at the first clique
/// certifiably exceeding 1: the verdict is unchanged, the reported value is
/// then only a lower bound (flagged in the report).
LoReport check_lo(const Behavior &b, int k, long max_vertices = 1000000,
                  const Rational &slack = default_slack(), bool exact_value = true);

/// Local coarse-graining of each party's outputs along the given partitions.
Behavior coarse_grain_behavior(const Behavior &b,
                               const std::vector<std::vector<std::vector<int>>> &partitions);

}  // namespace gptbox

#endif  // GPTBOX_BEHAVIOR_HPP
