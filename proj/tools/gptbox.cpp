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
//
// gptbox CLI: checks the device-independent principles (LO, CE,
// no-signalling, Sufficient Orthogonality) on systems, behaviors, and
// test-space files, and exports the built-in model zoo.
//
// Exit codes: 0 = all checks satisfied, 2 = a principle is violated
// (a finding, not a failure), 1 = usage or input error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "gptbox/deciders.hpp"
#include "gptbox/json_io.hpp"
#include "gptbox/zoo.hpp"

namespace {

using namespace gptbox;

constexpr int kOk = 0, kError = 1, kViolated = 2;

long resource_cap() {
  if (const char *env = std::getenv("GPTBOX_MAX_VERTICES")) return std::atol(env);
  return 1000000;
}

void print_machine(const json &j) {
  std::cout << "== machine ==\n" << j.dump() << "\n";
}

int cmd_check_lo(const std::string &path, int level, long cap, bool exact_value) {
  Behavior b = behavior_from_json(load_json_file(path));
  json machine;
  machine["command"] = "check-lo";
  machine["file"] = path;
  machine["levels"] = json::array();
  bool all_ok = true;
  for (int k = 1; k <= level; ++k) {
    LoReport rep = check_lo(b, k, cap, default_slack(), exact_value);
    std::cout << "LO level " << k << ": " << (rep.satisfied ? "satisfied" : "VIOLATED")
              << ", max locally-orthogonal weight " << rep.max_clique_value.str()
              << (rep.value_is_lower_bound ? " (lower bound)" : "")
              << (rep.certainty == Cert::Exact ? " [exact]" : " [within precision]") << "\n";
    if (!rep.satisfied) {
      std::cout << "  violating event set:\n";
      for (const auto &e : rep.witness) std::cout << "    (" << e.str() << ")\n";
    }
    json jr;
    jr["level"] = k;
    jr["satisfied"] = rep.satisfied;
    jr["value"] = scalar_to_json(rep.max_clique_value);
    jr["value_is_lower_bound"] = rep.value_is_lower_bound;
    json events = json::array();
    for (const auto &e : rep.witness) events.push_back(e.str());
    jr["witness"] = events;
    machine["levels"].push_back(jr);
    all_ok = all_ok && rep.satisfied;
  }
  machine["satisfied"] = all_ok;
  print_machine(machine);
  return all_ok ? kOk : kViolated;
}

int cmd_check_ce(const std::string &hpath, const std::string &wpath, int level, long cap) {
  auto h = hypergraph_from_json(load_json_file(hpath));
  Vec w = weight_from_json(load_json_file(wpath), *h);
  Verdict pw = is_probability_weight(w, *h);
  if (!pw.holds) {
    std::cerr << "error: not a probability weight: " << pw.note << "\n";
    return kError;
  }
  ProbabilityWeight weight{h, w};
  json machine;
  machine["command"] = "check-ce";
  machine["levels"] = json::array();
  bool all_ok = true;
  for (int k = 1; k <= level; ++k) {
    CeReport rep = check_ce(weight, k, cap);
    std::cout << "CE level " << k << ": " << (rep.satisfied ? "satisfied" : "VIOLATED")
              << ", max exclusive weight " << rep.max_clique_value.str()
              << (rep.certainty == Cert::Exact ? " [exact]" : " [within precision]") << "\n";
    if (!rep.satisfied) {
      std::cout << "  violating answer strings:\n";
      for (const auto &s : rep.witness) {
        std::cout << "    (";
        for (size_t i = 0; i < s.size(); ++i)
          std::cout << (i ? "," : "") << h->vertices[s[i]];
        std::cout << ")\n";
      }
    }
    json jr;
    jr["level"] = k;
    jr["satisfied"] = rep.satisfied;
    jr["value"] = scalar_to_json(rep.max_clique_value);
    machine["levels"].push_back(jr);
    all_ok = all_ok && rep.satisfied;
  }
  machine["satisfied"] = all_ok;
  print_machine(machine);
  return all_ok ? kOk : kViolated;
}

int cmd_check_so(const std::string &path, const std::vector<int> &indices) {
  SystemPtr sys = system_from_json(load_json_file(path));
  std::vector<Effect> effects;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(sys->effect_generators.size())) {
      std::cerr << "error: effect index " << i << " out of range\n";
      return kError;
    }
    effects.push_back(make_effect(sys, sys->effect_generators[i]));
  }
  json machine;
  machine["command"] = "check-so";
  machine["system"] = sys->name;
  machine["effects"] = indices;
  Verdict v;
  try {
    v = sufficient_orthogonality(effects);
  } catch (const PreconditionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  std::cout << "coexistence of the pure orthogonal set: " << (v.holds ? "holds" : "VIOLATED")
            << " (" << v.note << ")"
            << (v.certainty == Cert::Exact ? " [exact]" : " [within precision]") << "\n";
  if (v.holds && !v.witness_effects.empty()) {
    std::cout << "  completing measurement has " << v.witness_effects.size() << " outcomes\n";
  }
  if (!v.holds && !v.witness_states.empty()) {
    std::cout << "  witness state coordinates:";
    for (const auto &c : v.witness_states[0]) std::cout << " " << c.str();
    std::cout << "\n";
  }
  machine["holds"] = v.holds;
  machine["note"] = v.note;
  print_machine(machine);
  return v.holds ? kOk : kViolated;
}

int cmd_check_ns(const std::string &path) {
  Behavior b = behavior_from_json(load_json_file(path));
  Verdict v = is_no_signalling(b);
  std::cout << "no-signalling: " << (v.holds ? "holds" : "VIOLATED")
            << (v.note.empty() ? "" : " (" + v.note + ")") << "\n";
  json machine;
  machine["command"] = "check-ns";
  machine["holds"] = v.holds;
  machine["note"] = v.note;
  print_machine(machine);
  return v.holds ? kOk : kViolated;
}

int cmd_zoo(const std::string &name, int param, const std::string &out) {
  json j;
  std::string kind;
  if (name == "classical") {
    j = system_to_json(*zoo::classical_system(param));
    kind = "system";
  } else if (name == "squarebit") {
    j = system_to_json(*zoo::square_bit());
    kind = "system";
  } else if (name == "polygon") {
    j = system_to_json(*zoo::polygon_system(param));
    kind = "system";
  } else if (name == "prbox") {
    j = behavior_to_json(zoo::pr_box());
    kind = "behavior";
  } else if (name == "tsirelson") {
    j = behavior_to_json(zoo::tsirelson_behavior());
    kind = "behavior";
  } else {
    std::cerr << "error: unknown zoo model '" << name
              << "' (known: classical, squarebit, polygon, prbox, tsirelson)\n";
    return kError;
  }
  save_json_file(out, j);
  std::cout << "wrote " << kind << " '" << name << "' to " << out
            << " (self-validation passed)\n";
  json machine;
  machine["command"] = "zoo";
  machine["model"] = name;
  machine["kind"] = kind;
  machine["out"] = out;
  print_machine(machine);
  return kOk;
}

int cmd_validate(const std::string &path) {
  json j = load_json_file(path);
  json machine;
  machine["command"] = "validate";
  machine["file"] = path;
  if (j.contains("pure_states")) {
    SystemPtr sys = system_from_json(j);
    std::cout << "system '" << sys->name << "': " << sys->pure_states.size()
              << " pure states, " << sys->effect_generators.size()
              << " effect generators, dim " << sys->dim << ", "
              << (sys->is_exact() ? "exact" : "interval") << " coordinates; valid\n";
    machine["kind"] = "system";
  } else if (j.contains("table")) {
    Behavior b = behavior_from_json(j);
    std::cout << "behavior: " << b.sc.parties() << " parties, valid\n";
    machine["kind"] = "behavior";
  } else if (j.contains("edges")) {
    auto h = hypergraph_from_json(j);
    std::cout << "hypergraph: " << h->vertex_count() << " vertices, " << h->edges.size()
              << " hyperedges; valid\n";
    machine["kind"] = "hypergraph";
  } else {
    std::cerr << "error: unrecognized file kind\n";
    return kError;
  }
  machine["valid"] = true;
  print_machine(machine);
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"gptbox: cone-model checks for nonlocality and contextuality principles"};
  app.require_subcommand(1);

  std::string behavior_file, hypergraph_file, weight_file, system_file, file, out = "out.json";
  std::string zoo_name;
  int level = 1, zoo_param = 0, max_level = 3;
  long cap = resource_cap();
  bool lower_bound_ok = false;
  std::vector<int> effect_indices;

  auto *lo = app.add_subcommand("check-lo", "Local Orthogonality hierarchy on a behavior file");
  lo->add_option("behavior", behavior_file, "behavior JSON file")->required();
  lo->add_option("--level,-k", level, "highest hierarchy level to check");
  lo->add_option("--max-level", max_level, "hierarchy level cap (default 3)");
  lo->add_option("--max-vertices", cap, "vertex cap for the product graph");
  lo->add_flag("--allow-lower-bound", lower_bound_ok,
               "stop at the first certified violation instead of the exact value");

  auto *ce = app.add_subcommand("check-ce", "Consistent Exclusivity on hypergraph + weight files");
  ce->add_option("hypergraph", hypergraph_file, "hypergraph JSON file")->required();
  ce->add_option("weight", weight_file, "probability weight JSON file")->required();
  ce->add_option("--level,-k", level, "highest hierarchy level to check");
  ce->add_option("--max-level", max_level, "hierarchy level cap (default 3)");
  ce->add_option("--max-vertices", cap, "vertex cap for the product graph");

  auto *so = app.add_subcommand("check-so", "coexistence of a pure orthogonal effect set");
  so->add_option("system", system_file, "system JSON file")->required();
  so->add_option("--effects,-e", effect_indices, "indices into effect_generators")->required();

  auto *ns = app.add_subcommand("check-ns", "no-signalling of a behavior file");
  ns->add_option("behavior", behavior_file, "behavior JSON file")->required();

  auto *zoo_cmd = app.add_subcommand("zoo", "export a built-in model");
  zoo_cmd->add_option("name", zoo_name, "classical | squarebit | polygon | prbox | tsirelson")
      ->required();
  zoo_cmd->add_option("param", zoo_param, "size parameter (classical n, polygon n)");
  zoo_cmd->add_option("--out,-o", out, "output path");

  auto *val = app.add_subcommand("validate", "validate a system/behavior/hypergraph file");
  val->add_option("file", file, "JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if ((lo->parsed() || ce->parsed()) && level > max_level) {
      std::cerr << "error: level " << level << " exceeds the hierarchy cap " << max_level
                << " (raise it with --max-level)\n";
      return 1;
    }
    if (lo->parsed()) return cmd_check_lo(behavior_file, level, cap, !lower_bound_ok);
    if (ce->parsed()) return cmd_check_ce(hypergraph_file, weight_file, level, cap);
    if (so->parsed()) return cmd_check_so(system_file, effect_indices);
    if (ns->parsed()) return cmd_check_ns(behavior_file);
    if (zoo_cmd->parsed()) return cmd_zoo(zoo_name, zoo_param, out);
    if (val->parsed()) return cmd_validate(file);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceCapExceeded &e) {
    std::cerr << "resource cap: " << e.what() << " (override with GPTBOX_MAX_VERTICES)\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
