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

#ifndef GPTBOX_RATIONAL_HPP
#define GPTBOX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gptbox/errors.hpp"

namespace gptbox {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.  Thin value wrapper around GMP's mpq_class that
/// pins the canonical form and the "p/q" text format used by the file
/// formats and the CLI.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class &num, const mpz_class &den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p", "p/q".  Throws ParseError on anything else.
  static Rational parse(const std::string &text);

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational &a, const Rational &b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational &a, const Rational &b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational &a, const Rational &b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational &operator+=(const Rational &b) { q_ += b.q_; return *this; }
  Rational &operator-=(const Rational &b) { q_ -= b.q_; return *this; }
  Rational &operator*=(const Rational &b) { q_ *= b.q_; return *this; }
  Rational &operator/=(const Rational &b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
  }

  double to_double() const { return q_.get_d(); }

  /// Largest multiple of 2^-prec_bits that is <= *this.
  Rational floor_to_dyadic(unsigned prec_bits) const;
  /// Smallest multiple of 2^-prec_bits that is >= *this.
  Rational ceil_to_dyadic(unsigned prec_bits) const;

  /// Exact double -> rational conversion (doubles are dyadic rationals).
  static Rational from_double(double x);

 private:
  mpq_class q_;
};

inline Rational min(const Rational &a, const Rational &b) { return a < b ? a : b; }
inline Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

}  // namespace gptbox

#endif  // GPTBOX_RATIONAL_HPP
