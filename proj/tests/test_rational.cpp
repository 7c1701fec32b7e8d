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

#include "gptbox/rational.hpp"

#include "doctest.h"

using namespace gptbox;

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
  // No drift over many operations.
  Rational acc(0);
  for (int i = 1; i <= 50; ++i) acc += Rational(1, i) - Rational(1, i + 1);
  CHECK(acc == Rational(1) - Rational(1, 51));
}

TEST_CASE("rational parse round-trips") {
  for (const char *s : {"0", "-7", "22/7", "-3/2", "123456789123456789/987654321987654321"}) {
    Rational r = Rational::parse(s);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("dyadic rounding brackets the value") {
  Rational x(1, 3);
  Rational lo = x.floor_to_dyadic(16), hi = x.ceil_to_dyadic(16);
  CHECK(lo <= x);
  CHECK(x <= hi);
  CHECK(hi - lo <= Rational(1, 65536));
  Rational neg(-1, 3);
  CHECK(neg.floor_to_dyadic(16) <= neg);
  CHECK(neg.ceil_to_dyadic(16) >= neg);
}

TEST_CASE("from_double is exact on dyadics") {
  CHECK(Rational::from_double(0.25) == Rational(1, 4));
  CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}
