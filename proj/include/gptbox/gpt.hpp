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

#ifndef GPTBOX_GPT_HPP
#define GPTBOX_GPT_HPP

#include <memory>
#include <string>
#include <vector>

#include "gptbox/linalg.hpp"
#include "gptbox/scalar.hpp"

namespace gptbox {

/// How the set of effects of a system is read:
///  * NoRestriction — every functional with values in [0,1] on the state
///    cone is an effect; effect_generators only name the extreme rays.
///  * Generated — only conic combinations of effect_generators (truncated
///    at validity) are effects.
enum class EffectMode { NoRestriction, Generated };

/// A finite-dimensional system: the state cone is generated by pure_states,
/// the effect cone by effect_generators, and unit is the unique effect
/// giving 1 on every pure state.
struct GptSystem {
  std::string name;
  int dim = 0;
  long field_k = 1;  // quadratic field Q(sqrt(k)) of the coordinates; 1 = rational
  Mat pure_states;
  Mat effect_generators;
  Vec unit;
  EffectMode mode = EffectMode::NoRestriction;
  std::vector<std::string> state_labels;   // optional, parallel to pure_states
  std::vector<std::string> effect_labels;  // optional, parallel to effect_generators

  bool is_exact() const;

  /// Checks (u|phi) = 1 for every pure state, (g|phi) >= 0 for every
  /// generator/pure-state pair, and that u is reachable in cone(generators).
  /// Throws Error with a description on violation.
  void validate() const;
};

using SystemPtr = std::shared_ptr<const GptSystem>;

struct State {
  SystemPtr sys;
  Vec coords;
};

struct Effect {
  SystemPtr sys;
  Vec coords;
};

struct Measurement {
  SystemPtr sys;
  std::vector<Effect> effects;
  std::vector<std::string> labels;  // optional outcome labels
};

/// A random preparation: sub-normalized states with unit total mass.
struct Ensemble {
  SystemPtr sys;
  std::vector<State> states;
};

bool same_system(const SystemPtr &a, const SystemPtr &b);

State make_state(SystemPtr sys, Vec coords);
Effect make_effect(SystemPtr sys, Vec coords);

/// The probability pairing (e|s).
Scalar pair(const Effect &e, const State &s);

/// (u|s) = 1, exactly or within certification.
bool is_deterministic(const State &s);

/// Minimal tensor product: Kronecker products of pure states and effect
/// generators, unit u_a (x) u_b.
SystemPtr tensor_system(const SystemPtr &a, const SystemPtr &b);

State tensor_state(const State &a, const State &b, SystemPtr product);
Effect tensor_effect(const Effect &a, const Effect &b, SystemPtr product);

/// Merges outcomes along a partition (given as index blocks covering all
/// outcomes exactly once); block effects are the sums of their members.
Measurement coarse_grain(const Measurement &m, const std::vector<std::vector<int>> &partition);

/// 0 <= (e|phi) <= 1 for every pure state.  In Generated mode additionally
/// requires membership in cone(effect_generators).
bool is_valid_effect(const Effect &e);

/// Every effect valid and the sum equal to the unit effect.
bool is_measurement(const std::vector<Effect> &effects);

void validate_ensemble(const Ensemble &ens);

/// Membership of s in cone(pure_states), decided by LP.
bool state_in_cone(const State &s);

/// True when the pure states span the ambient space, which makes the unit
/// effect the unique valid effect pairing to 1 with every pure state.
bool has_unique_unit(const GptSystem &sys);

}  // namespace gptbox

#endif  // GPTBOX_GPT_HPP
