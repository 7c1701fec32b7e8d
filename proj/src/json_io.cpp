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

#include "gptbox/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace gptbox {

json scalar_to_json(const Scalar &s) {
  if (s.is_rational()) return s.rational_value().str();
  if (s.is_exact()) return json{{"a", s.quad_a().str()}, {"b", s.quad_b().str()}};
  return json{{"lo", s.ivl_lo().str()}, {"hi", s.ivl_hi().str()}};
}

Scalar scalar_from_json(const json &j, long field_k) {
  try {
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_object() && j.contains("lo"))
      return Scalar::interval(Rational::parse(j.at("lo").get<std::string>()),
                              Rational::parse(j.at("hi").get<std::string>()));
    if (j.is_object() && j.contains("a"))
      return Scalar::quad(Rational::parse(j.at("a").get<std::string>()),
                          Rational::parse(j.at("b").get<std::string>()), field_k);
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad scalar: ") + e.what());
  }
  throw ParseError("unrecognized scalar encoding: " + j.dump());
}

namespace {

json mat_to_json(const Mat &m) {
  json rows = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &s : row) r.push_back(scalar_to_json(s));
    rows.push_back(std::move(r));
  }
  return rows;
}

Mat mat_from_json(const json &j, long field_k) {
  Mat m;
  for (const auto &row : j) {
    Vec v;
    for (const auto &s : row) v.push_back(scalar_from_json(s, field_k));
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace

json system_to_json(const GptSystem &sys) {
  json j;
  j["name"] = sys.name;
  j["dim"] = sys.dim;
  j["field_k"] = sys.field_k;
  j["mode"] = sys.mode == EffectMode::Generated ? "generated" : "no-restriction";
  j["pure_states"] = mat_to_json(sys.pure_states);
  j["effect_generators"] = mat_to_json(sys.effect_generators);
  json unit = json::array();
  for (const auto &s : sys.unit) unit.push_back(scalar_to_json(s));
  j["unit"] = unit;
  if (!sys.state_labels.empty()) j["state_labels"] = sys.state_labels;
  if (!sys.effect_labels.empty()) j["effect_labels"] = sys.effect_labels;
  return j;
}

SystemPtr system_from_json(const json &j) {
  try {
    auto sys = std::make_shared<GptSystem>();
    sys->name = j.at("name").get<std::string>();
    sys->dim = j.at("dim").get<int>();
    sys->field_k = j.value("field_k", 1L);
    sys->mode = j.value("mode", std::string("no-restriction")) == "generated"
                    ? EffectMode::Generated
                    : EffectMode::NoRestriction;
    sys->pure_states = mat_from_json(j.at("pure_states"), sys->field_k);
    sys->effect_generators = mat_from_json(j.at("effect_generators"), sys->field_k);
    for (const auto &s : j.at("unit")) sys->unit.push_back(scalar_from_json(s, sys->field_k));
    if (j.contains("state_labels"))
      sys->state_labels = j.at("state_labels").get<std::vector<std::string>>();
    if (j.contains("effect_labels"))
      sys->effect_labels = j.at("effect_labels").get<std::vector<std::string>>();
    sys->validate();
    return sys;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad system file: ") + e.what());
  }
}

namespace {

std::string joined(const std::vector<int> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> split_ints(const std::string &s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw ParseError("empty index in key: " + s);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

json behavior_to_json(const Behavior &b) {
  json j;
  j["parties"] = b.sc.parties();
  j["inputs"] = b.sc.inputs;
  j["outputs"] = b.sc.outputs;
  json table = json::object();
  for (long x = 0; x < b.sc.input_count(); ++x) {
    json row = json::object();
    for (long y = 0; y < b.sc.output_count(); ++y) {
      const Scalar &p = b.p(x, y);
      if (p.is_exact() && p.is_rational() && p.rational_value().is_zero()) continue;
      row[joined(b.sc.unflatten_output(y))] = scalar_to_json(p);
    }
    table[joined(b.sc.unflatten_input(x))] = std::move(row);
  }
  j["table"] = std::move(table);
  return j;
}

Behavior behavior_from_json(const json &j) {
  try {
    Behavior b;
    b.sc.inputs = j.at("inputs").get<std::vector<int>>();
    b.sc.outputs = j.at("outputs").get<std::vector<int>>();
    if (j.contains("parties") && j.at("parties").get<int>() != b.sc.parties())
      throw ParseError("behavior file: parties field disagrees with the alphabets");
    b.table.assign(b.sc.input_count() * b.sc.output_count(), Scalar(0));
    long field_k = j.value("field_k", 1L);
    for (const auto &[xkey, row] : j.at("table").items()) {
      long x = b.sc.flat_input(split_ints(xkey));
      for (const auto &[ykey, val] : row.items())
        b.p(x, b.sc.flat_output(split_ints(ykey))) = scalar_from_json(val, field_k);
    }
    b.validate();
    return b;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad behavior file: ") + e.what());
  }
}

json hypergraph_to_json(const Hypergraph &h) {
  json j;
  j["vertices"] = h.vertices;
  json edges = json::array();
  for (const auto &e : h.edges) {
    json edge = json::array();
    for (int v : e) edge.push_back(h.vertices[v]);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

HypergraphPtr hypergraph_from_json(const json &j) {
  try {
    auto h = std::make_shared<Hypergraph>();
    h->vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto &edge : j.at("edges")) {
      std::vector<int> e;
      for (const auto &label : edge) {
        auto it = std::find(h->vertices.begin(), h->vertices.end(), label.get<std::string>());
        if (it == h->vertices.end())
          throw ParseError("hypergraph file: unknown vertex " + label.get<std::string>());
        e.push_back(static_cast<int>(it - h->vertices.begin()));
      }
      h->edges.push_back(std::move(e));
    }
    h->validate();
    return h;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad hypergraph file: ") + e.what());
  }
}

json weight_to_json(const ProbabilityWeight &w) {
  json j = json::object();
  for (int v = 0; v < w.h->vertex_count(); ++v) j[w.h->vertices[v]] = scalar_to_json(w.w[v]);
  return j;
}

Vec weight_from_json(const json &j, const Hypergraph &h) {
  try {
    Vec w(h.vertex_count(), Scalar(0));
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (!j.contains(h.vertices[v]))
        throw ParseError("weight file: missing vertex " + h.vertices[v]);
      w[v] = scalar_from_json(j.at(h.vertices[v]), 1);
    }
    return w;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad weight file: ") + e.what());
  }
}

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace gptbox
