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

#ifndef GPTBOX_DECIDERS_HPP
#define GPTBOX_DECIDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gptbox/gpt.hpp"

namespace gptbox {

/// Outcome of a decision procedure, with the witnessing data needed to
/// re-check it by direct pairing arithmetic.
struct Verdict {
  bool holds = false;
  Cert certainty = Cert::Exact;
  Mat witness_states;   // e.g. the biorthogonal partners
  Mat witness_effects;  // e.g. a discriminating measurement or rest-effect
  std::string note;     // human-oriented detail (mode, failing index, ...)
};

/// Extreme rays of the no-restriction effect cone, derived from the state
/// cone by facet enumeration.  Refuses systems of dimension > 4; larger
/// systems must list their generators explicitly.
Mat derive_effect_generators(const GptSystem &sys);

/// Effect generators to use for purity questions: the listed ones, else the
/// derived facet rays.
Mat effect_rays_for(const GptSystem &sys);

/// e lies on an extreme ray of the effect cone: it is in the cone but not a
/// conic combination of generators not parallel to it.
Verdict is_pure_effect(const Effect &e);

/// pair(effects[y], states[y']) == delta_{y,y'}.
Verdict are_biorthogonal(const std::vector<Effect> &effects, const std::vector<State> &states);

/// There exists a biorthogonal state family (found by LP over the state
/// polytope); witness_states carries it.
Verdict is_orthogonal_effect_set(const std::vector<Effect> &effects);

/// There exists a biorthogonal effect family among the valid effects;
/// witness_effects carries it.
Verdict are_states_orthogonal(const std::vector<State> &states);

/// A single measurement distinguishing the states exists (joint LP);
/// witness_effects is that measurement.
Verdict perfectly_distinguishable(const std::vector<State> &states);

/// Every set of pure orthogonal effects can coexist in one measurement;
/// decided for the given set.  Preconditions: all pure (ImpureInput), the
/// set orthogonal (NonOrthogonalInput).  Under no-restriction the decision
/// is the validity of the rest-effect u - sum; in Generated mode the rest
/// must also lie in the generator cone.
Verdict sufficient_orthogonality(const std::vector<Effect> &effects);

/// Every pair from the set coexists in some measurement.
Verdict mutually_exclusive(const std::vector<Effect> &effects);

/// The whole set coexists in one measurement.  Inputs must be spiky: pure,
/// or declared as sums of pure effects via decompositions[i] (indices are
/// positions in `parts`).
Verdict coexist_mutually_exclusive_spiky(
    const std::vector<Effect> &effects,
    const std::vector<std::vector<Effect>> &decompositions = {});

/// The face of pure states where e pairs to 1 contains exactly one vertex.
/// Throws NotNormalized when no state attains 1.
Verdict identifies_pure_state(const Effect &e);

/// No listed pure state extends the set while keeping joint
/// distinguishability.  Pre: the input set is distinguishable.
Verdict is_maximal_distinguishable_set(const std::vector<State> &states);

/// e is a vertex of the truncated effect polytope {0 <= (f|phi) <= 1}:
/// the tight constraints at e span the ambient space.
Verdict is_extremal_effect(const Effect &e);

/// For pure measurements sharpness equals orthogonality; witness_states is
/// the biorthogonal family of the repeatable measure-and-prepare test.
/// Pre: every effect pure (PureOnly).
Verdict is_sharp_pure_measurement(const Measurement &m);

}  // namespace gptbox

#endif  // GPTBOX_DECIDERS_HPP
