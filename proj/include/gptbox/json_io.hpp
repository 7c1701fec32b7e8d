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

#ifndef GPTBOX_JSON_IO_HPP
#define GPTBOX_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "gptbox/behavior.hpp"
#include "gptbox/gpt.hpp"
#include "gptbox/hypergraph.hpp"

namespace gptbox {

using nlohmann::json;

// Scalars serialize bit-exactly:
//   rational            "p/q"
//   a + b sqrt(k)       {"a": "p/q", "b": "r/s"}   (k is file-level field_k)
//   interval            {"lo": "p/q", "hi": "p/q"}
json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const json &j, long field_k);

// System file: {name, dim, field_k, pure_states, effect_generators, unit,
// mode, state_labels?, effect_labels?}.
json system_to_json(const GptSystem &sys);
SystemPtr system_from_json(const json &j);

// Behavior file: {parties, inputs, outputs, field_k?, table: {"x1,..":
// {"y1,..": scalar}}}; absent entries read as 0.
json behavior_to_json(const Behavior &b);
Behavior behavior_from_json(const json &j);

// Hypergraph file: {vertices: [labels], edges: [[labels]]}.
json hypergraph_to_json(const Hypergraph &h);
HypergraphPtr hypergraph_from_json(const json &j);

// Weight file: {vertex-label: scalar}.
json weight_to_json(const ProbabilityWeight &w);
Vec weight_from_json(const json &j, const Hypergraph &h);

json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const json &j);

}  // namespace gptbox

#endif  // GPTBOX_JSON_IO_HPP
