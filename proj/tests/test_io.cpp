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

#include "doctest.h"
#include "gptbox/zoo.hpp"

using namespace gptbox;

TEST_CASE("scalar JSON round-trips bit-exactly") {
  std::vector<Scalar> cases = {
      Scalar(Rational(3, 7)),
      Scalar(Rational(-22, 9)),
      Scalar(0),
      Scalar::quad(Rational(1, 2), Rational(-3, 4), 5),
      Scalar::interval(Rational(1, 3), Rational(2, 3)),
  };
  for (const auto &s : cases) {
    Scalar back = scalar_from_json(scalar_to_json(s), 5);
    CHECK(back.identical(s));
  }
}

TEST_CASE("system files round-trip bit-exactly") {
  for (const auto &sys : {zoo::classical_system(3), zoo::square_bit(), zoo::polygon_system(5),
                          zoo::polygon_system(7)}) {
    json j = system_to_json(*sys);
    SystemPtr back = system_from_json(j);
    CHECK(same_system(sys, back));
    // Serialization is deterministic.
    CHECK(system_to_json(*back).dump() == j.dump());
  }
}

TEST_CASE("behavior files round-trip") {
  auto pr = zoo::pr_box();
  json j = behavior_to_json(pr);
  Behavior back = behavior_from_json(j);
  CHECK(back.sc == pr.sc);
  for (size_t i = 0; i < pr.table.size(); ++i) CHECK(back.table[i].identical(pr.table[i]));

  // Interval tables (quantum) round-trip too.
  auto ts = zoo::tsirelson_behavior();
  Behavior ts_back = behavior_from_json(behavior_to_json(ts));
  for (size_t i = 0; i < ts.table.size(); ++i) CHECK(ts_back.table[i].identical(ts.table[i]));
}

TEST_CASE("hypergraph and weight files round-trip") {
  auto h = std::make_shared<Hypergraph>();
  for (int i = 0; i < 5; ++i) h->vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < 5; ++i) h->edges.push_back({i, (i + 1) % 5});
  auto back = hypergraph_from_json(hypergraph_to_json(*h));
  CHECK(back->vertices == h->vertices);
  CHECK(back->edges == h->edges);

  auto w = make_probability_weight(h, Vec(5, Scalar(Rational(1, 2))));
  Vec wback = weight_from_json(weight_to_json(w), *h);
  for (int i = 0; i < 5; ++i) CHECK(wback[i].identical(w.w[i]));
}

TEST_CASE("parse errors are structured") {
  CHECK_THROWS_AS(behavior_from_json(json{{"inputs", {2, 2}}}), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json::array(), 1), ParseError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
  // Invalid system content fails validation on load.
  auto sq = zoo::square_bit();
  json j = system_to_json(*sq);
  j["unit"][2] = "2";  // unit no longer pairs to 1
  CHECK_THROWS(system_from_json(j));
}
