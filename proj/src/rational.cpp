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

#include <cmath>
#include <cstdlib>

namespace gptbox {

Rational Rational::parse(const std::string &text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text, 10);
      return Rational(n);
    }
    std::string ns = text.substr(0, slash);
    std::string ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw ParseError("bad rational literal: " + text);
    mpz_class n(ns, 10), d(ds, 10);
    if (d == 0) throw ParseError("zero denominator in: " + text);
    return Rational(n, d);
  } catch (const std::invalid_argument &) {
    throw ParseError("bad rational literal: " + text);
  }
}

Rational Rational::floor_to_dyadic(unsigned prec_bits) const {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), prec_bits);
  mpz_class scaled_num = q_.get_num() * scale;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
  return Rational(fl, scale);
}

Rational Rational::ceil_to_dyadic(unsigned prec_bits) const {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), prec_bits);
  mpz_class scaled_num = q_.get_num() * scale;
  mpz_class cl;
  mpz_cdiv_q(cl.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
  return Rational(cl, scale);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
  mpq_class q(x);
  return Rational(q);
}

}  // namespace gptbox
