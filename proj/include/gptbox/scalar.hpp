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

#ifndef GPTBOX_SCALAR_HPP
#define GPTBOX_SCALAR_HPP

#include <string>
#include <vector>

#include "gptbox/errors.hpp"
#include "gptbox/rational.hpp"

namespace gptbox {

/// Whether a computed fact is an exact field identity or only holds within
/// the working interval precision.
enum class Cert { Exact, Within };

inline Cert meet(Cert a, Cert b) {
  return (a == Cert::Exact && b == Cert::Exact) ? Cert::Exact : Cert::Within;
}

/// A number in one of two representations:
///
///  * exact element of a real quadratic field, a + b*sqrt(k) with rational
///    a, b and a fixed square-free integer k >= 1 (k == 1 forces b == 0);
///  * a rational interval [lo, hi] enclosing an otherwise inexpressible real.
///
/// Arithmetic stays exact as long as both operands live in the same field
/// (or one is rational).  Mixing an exact value with an interval degrades to
/// interval arithmetic with outward rounding.  Mixing two irrational values
/// from different fields throws FieldMismatch; the scalar never silently
/// changes field.
class Scalar {
 public:
  Scalar() : exact_(true), a_(0), b_(0), k_(1) {}
  Scalar(long n) : exact_(true), a_(n), b_(0), k_(1) {}  // NOLINT: implicit by design
  Scalar(const Rational &r) : exact_(true), a_(r), b_(0), k_(1) {}  // NOLINT

  static Scalar quad(const Rational &a, const Rational &b, long k);
  static Scalar interval(const Rational &lo, const Rational &hi);
  /// sqrt(n) for integer n >= 0, exact: square factors are extracted so the
  /// stored k is square-free (sqrt(12) -> 2*sqrt(3); sqrt(9) -> 3).
  static Scalar sqrt_int(long n);

  bool is_exact() const { return exact_; }
  bool is_rational() const { return exact_ && b_.is_zero(); }
  /// Field tag: k for exact values (1 when rational), 0 for intervals.
  long field() const { return exact_ ? k_ : 0; }

  const Rational &quad_a() const { return a_; }
  const Rational &quad_b() const { return b_; }
  /// The rational value of a scalar known to be rational.
  Rational rational_value() const;
  const Rational &ivl_lo() const { return lo_; }
  const Rational &ivl_hi() const { return hi_; }

  /// Rational lower/upper bounds valid in both representations.
  Rational inf(unsigned prec_bits = kEnclosureBits) const;
  Rational sup(unsigned prec_bits = kEnclosureBits) const;
  Rational midpoint() const;
  /// Enclosure width (0 for exact values).
  Rational width() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar &x, const Scalar &y);
  friend Scalar operator-(const Scalar &x, const Scalar &y);
  friend Scalar operator*(const Scalar &x, const Scalar &y);
  friend Scalar operator/(const Scalar &x, const Scalar &y);
  Scalar &operator+=(const Scalar &y) { *this = *this + y; return *this; }
  Scalar &operator-=(const Scalar &y) { *this = *this - y; return *this; }
  Scalar &operator*=(const Scalar &y) { *this = *this * y; return *this; }
  Scalar &operator/=(const Scalar &y) { *this = *this / y; return *this; }

  /// Exact sign for field elements.  For intervals: the certain sign when the
  /// enclosure does not straddle zero, 0 for the point interval [0,0];
  /// otherwise throws Indeterminate.
  int sign() const;

  /// Sign for search heuristics: never throws.  A straddling interval whose
  /// enclosure is narrower than the certification width counts as zero,
  /// otherwise the midpoint decides.
  int sign_lenient() const;

  /// Certified sign: like sign(), except a straddling interval of width at
  /// most cert_eps counts as zero "within precision" and downgrades cert.
  int certified_sign(Cert &cert) const;

  bool identical(const Scalar &other) const;

  double to_double() const;
  std::string str() const;

  static constexpr unsigned kEnclosureBits = 192;  // sqrt/cos enclosure target
  static constexpr unsigned kRoundBits = 256;      // outward rounding of interval results
  /// Maximum enclosure width accepted when an interval must be read as an
  /// exact boundary value (2^-64).
  static const Rational &cert_eps();

 private:
  Scalar to_interval_scalar(unsigned prec_bits) const;
  void round_outward();

  bool exact_;
  Rational a_, b_;
  long k_ = 1;
  Rational lo_, hi_;  // interval representation
};

/// -1 / 0 / +1 comparison of x against y with certification bookkeeping.
int cmp3(const Scalar &x, const Scalar &y, Cert &cert);

/// Rational enclosure of sqrt(x), x >= 0, with 2^-prec_bits endpoints.
Scalar sqrt_enclosure(const Rational &x, unsigned prec_bits = Scalar::kEnclosureBits);

/// Rational interval enclosure of cos(pi * x).
Scalar cos_pi_frac(const Rational &x, unsigned prec_bits = Scalar::kEnclosureBits);

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Scalar dot(const Vec &x, const Vec &y);
bool vec_is_exact(const Vec &v);

}  // namespace gptbox

#endif  // GPTBOX_SCALAR_HPP
