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

#include "gptbox/zoo.hpp"

#include <cmath>

#include "doctest.h"
#include "gptbox/deciders.hpp"

using namespace gptbox;

namespace {

State nth_state(const SystemPtr &sys, int i) { return make_state(sys, sys->pure_states[i]); }
Effect nth_effect(const SystemPtr &sys, int i) { return make_effect(sys, sys->effect_generators[i]); }

}  // namespace

TEST_CASE("classical systems") {
  CHECK_THROWS_AS(zoo::classical_system(1), PreconditionError);
  auto c2 = zoo::classical_system(2);
  CHECK(is_measurement({nth_effect(c2, 0), nth_effect(c2, 1)}));
  auto c3 = zoo::classical_system(3);
  std::vector<State> all = {nth_state(c3, 0), nth_state(c3, 1), nth_state(c3, 2)};
  CHECK(perfectly_distinguishable(all).holds);
}

TEST_CASE("triangle is the classical 3-level system in polygon form") {
  auto tri = zoo::polygon_system(3);
  CHECK(tri->is_exact());
  CHECK(tri->field_k == 1);
  // Pairing table is the identity.
  for (int l = 0; l < 3; ++l)
    for (int s = 0; s < 3; ++s)
      CHECK(dot(tri->effect_generators[l], tri->pure_states[s]).rational_value() ==
            Rational(l == s ? 1 : 0));
  // Same pairing table as classical(3) vertex effects, up to labeling.
  auto c3 = zoo::classical_system(3);
  for (int l = 0; l < 3; ++l)
    for (int s = 0; s < 3; ++s)
      CHECK(dot(c3->effect_generators[l], c3->pure_states[s]).rational_value() ==
            dot(tri->effect_generators[l], tri->pure_states[s]).rational_value());
}

TEST_CASE("polygon fields are exact where advertised") {
  for (int n : {3, 4, 5, 6, 8, 10, 12}) CHECK(zoo::polygon_system(n)->is_exact());
  for (int n : {7, 9, 11}) CHECK(!zoo::polygon_system(n)->is_exact());
}

TEST_CASE("even polygon pairing pattern") {
  // (a_y|phi_y) = (a_{y+1}|phi_y) = 1 and (a_{y+n/2}|phi_y) = (a_{y+n/2+1}|phi_y) = 0.
  for (int n : {4, 6, 8}) {
    auto poly = zoo::polygon_system(n);
    Cert cert = Cert::Exact;
    for (int y = 0; y < n; ++y) {
      CHECK(cmp3(dot(poly->effect_generators[y], poly->pure_states[y]), Scalar(1), cert) == 0);
      CHECK(cmp3(dot(poly->effect_generators[(y + 1) % n], poly->pure_states[y]), Scalar(1),
                 cert) == 0);
      CHECK(cmp3(dot(poly->effect_generators[(y + n / 2) % n], poly->pure_states[y]), Scalar(0),
                 cert) == 0);
      CHECK(cmp3(dot(poly->effect_generators[(y + n / 2 + 1) % n], poly->pure_states[y]),
                 Scalar(0), cert) == 0);
    }
  }
}

TEST_CASE("odd polygon pairing pattern") {
  // (a_y|phi_y) = 1 and (a_{y+(n-1)/2}|phi_y) = (a_{y+(n+1)/2}|phi_y) = 0.
  for (int n : {5, 7, 9}) {
    auto poly = zoo::polygon_system(n);
    Cert cert = Cert::Exact;
    for (int y = 0; y < n; ++y) {
      CHECK(cmp3(dot(poly->effect_generators[y], poly->pure_states[y]), Scalar(1), cert) == 0);
      CHECK(cmp3(dot(poly->effect_generators[(y + (n - 1) / 2) % n], poly->pure_states[y]),
                 Scalar(0), cert) == 0);
      CHECK(cmp3(dot(poly->effect_generators[(y + (n + 1) / 2) % n], poly->pure_states[y]),
                 Scalar(0), cert) == 0);
    }
  }
}

TEST_CASE("square bit SO verdicts over all pure pairs") {
  // {a1,a3} and {a2,a4} coexist; every other orthogonal pure pair fails SO.
  auto sq = zoo::square_bit();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::vector<Effect> pair_set = {nth_effect(sq, i), nth_effect(sq, j)};
      auto v = sufficient_orthogonality(pair_set);
      bool is_measurement_pair = (i == 0 && j == 2) || (i == 1 && j == 3);
      CHECK(v.holds == is_measurement_pair);
    }
  }
}

TEST_CASE("triangle satisfies SO, all larger polygons violate it") {
  // n = 3: every orthogonal subset of pure effects coexists.
  auto tri = zoo::polygon_system(3);
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<Effect> set;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) set.push_back(nth_effect(tri, i));
    bool orthogonal = is_orthogonal_effect_set(set).holds;
    REQUIRE(orthogonal);  // the triangle table is the identity
    CHECK(sufficient_orthogonality(set).holds);
  }

  // n = 4..12: the critical pair is pure + orthogonal yet fails coexistence.
  for (int n = 4; n <= 12; ++n) {
    auto poly = zoo::polygon_system(n);
    auto [i, j] = zoo::polygon_critical_pair(n);
    std::vector<Effect> pair_set = {nth_effect(poly, i), nth_effect(poly, j)};
    CAPTURE(n);
    CHECK(is_pure_effect(pair_set[0]).holds);
    CHECK(is_orthogonal_effect_set(pair_set).holds);
    auto v = sufficient_orthogonality(pair_set);
    CHECK(!v.holds);
    CHECK(v.certainty == (poly->is_exact() ? Cert::Exact : Cert::Within));
  }
}

TEST_CASE("appendix-D inequality holds for odd n >= 5 and fails at 3") {
  for (int n : {5, 7, 9, 11}) {
    auto v = zoo::appendix_d_inequality(n);
    CAPTURE(n);
    CHECK(v.holds);
  }
  CHECK(!zoo::appendix_d_inequality(3).holds);
  CHECK_THROWS_AS(zoo::appendix_d_inequality(4), PreconditionError);
}

TEST_CASE("appendix-D margin exceeds 1e-3 up to n = 12") {
  for (int n : {5, 7, 9, 11}) {
    auto poly = zoo::polygon_system(n);
    int offset = (n + 1) / 2;
    Scalar s = dot(poly->effect_generators[0], poly->pure_states[n - 1]) +
               dot(poly->effect_generators[offset % n], poly->pure_states[n - 1]);
    Rational margin = s.inf() - Rational(1);
    CAPTURE(n);
    CHECK(margin > Rational(1, 1000));
  }
}

TEST_CASE("tsirelson behavior matches the closed form") {
  auto b = zoo::tsirelson_behavior();
  CHECK_NOTHROW(b.validate());
  // Entries are (1 +- 1/sqrt(2))/4 within the interval padding.
  double hi = (1 + 1 / std::sqrt(2.0)) / 4, lo = (1 - 1 / std::sqrt(2.0)) / 4;
  for (long x = 0; x < 4; ++x) {
    for (long y = 0; y < 4; ++y) {
      double v = b.p(x, y).midpoint().to_double();
      bool near = std::abs(v - hi) < 1e-9 || std::abs(v - lo) < 1e-9;
      CHECK(near);
    }
  }
  auto game = zoo::chsh_game();
  double expect = (2 + std::sqrt(2.0)) / 4;
  CHECK(payoff(game, b).midpoint().to_double() == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("zoo systems validate at construction") {
  for (int n = 3; n <= 12; ++n) CHECK_NOTHROW(zoo::polygon_system(n));
  CHECK_NOTHROW(zoo::square_bit());
  CHECK_NOTHROW(zoo::classical_system(5));
}
