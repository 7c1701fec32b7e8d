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

#include "gptbox/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gptbox {

namespace {

// 100 decimal digits of pi, enough for ~330-bit enclosures.
const char *kPiDigits =
    "31415926535897932384626433832795028841971693993751"
    "05820974944592307816406286208998628034825342117067";

Rational pi_lower() {
  static const Rational lo = [] {
    mpz_class num(kPiDigits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 99);
    return Rational(num, den);
  }();
  return lo;
}

Rational pi_upper() {
  static const Rational hi = [] {
    mpz_class num(kPiDigits, 10);
    num += 1;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 99);
    return Rational(num, den);
  }();
  return hi;
}

// Extracts the largest square divisor: n = s^2 * f with f square-free.
void extract_square(long n, long &s, long &f) {
  s = 1;
  f = 1;
  for (long p = 2; p * p <= n; ++p) {
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (long i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= n;
}

}  // namespace

const Rational &Scalar::cert_eps() {
  static const Rational eps = [] {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 64);
    return Rational(mpz_class(1), den);
  }();
  return eps;
}

Scalar Scalar::quad(const Rational &a, const Rational &b, long k) {
  if (k < 1) throw Error("quadratic field index must be >= 1");
  Scalar s;
  s.exact_ = true;
  s.a_ = a;
  if (b.is_zero() || k == 1) {
    s.b_ = b;  // k == 1 keeps b as a plain rational addend
    if (k == 1) { s.a_ = a + b; s.b_ = Rational(0); }
    s.k_ = 1;
  } else {
    long sq = 0, sf = 0;
    extract_square(k, sq, sf);
    if (sf == 1) {
      s.a_ = a + b * Rational(sq);
      s.b_ = Rational(0);
      s.k_ = 1;
    } else {
      s.b_ = b * Rational(sq);
      s.k_ = sf;
    }
  }
  return s;
}

Scalar Scalar::interval(const Rational &lo, const Rational &hi) {
  if (hi < lo) throw Error("interval with hi < lo");
  Scalar s;
  s.exact_ = false;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

Scalar Scalar::sqrt_int(long n) {
  if (n < 0) throw Error("sqrt of negative integer");
  if (n == 0) return Scalar(0);
  return quad(Rational(0), Rational(1), n);
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error("scalar is not rational: " + str());
  return a_;
}

Scalar Scalar::to_interval_scalar(unsigned prec_bits) const {
  if (!exact_) return *this;
  if (b_.is_zero()) return interval(a_, a_);
  Scalar root = sqrt_enclosure(Rational(k_), prec_bits);
  Rational t1 = b_ * root.lo_, t2 = b_ * root.hi_;
  return interval(a_ + min(t1, t2), a_ + max(t1, t2));
}

void Scalar::round_outward() {
  lo_ = lo_.floor_to_dyadic(kRoundBits);
  hi_ = hi_.ceil_to_dyadic(kRoundBits);
}

Rational Scalar::inf(unsigned prec_bits) const {
  if (exact_ && b_.is_zero()) return a_;
  return exact_ ? to_interval_scalar(prec_bits).lo_ : lo_;
}

Rational Scalar::sup(unsigned prec_bits) const {
  if (exact_ && b_.is_zero()) return a_;
  return exact_ ? to_interval_scalar(prec_bits).hi_ : hi_;
}

Rational Scalar::midpoint() const {
  if (exact_ && b_.is_zero()) return a_;
  Scalar iv = exact_ ? to_interval_scalar(kEnclosureBits) : *this;
  return (iv.lo_ + iv.hi_) / Rational(2);
}

Rational Scalar::width() const {
  if (exact_) return Rational(0);
  return hi_ - lo_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (exact_) {
    s.a_ = -a_;
    s.b_ = -b_;
  } else {
    s.lo_ = -hi_;
    s.hi_ = -lo_;
  }
  return s;
}

namespace {

// Resolves the common field for two exact scalars; throws when both carry
// irrational parts from different fields.
long common_field(const Scalar &x, const Scalar &y) {
  long kx = x.quad_b().is_zero() ? 1 : x.field();
  long ky = y.quad_b().is_zero() ? 1 : y.field();
  if (kx == 1) return ky;
  if (ky == 1) return kx;
  if (kx != ky)
    throw FieldMismatch("cannot combine sqrt(" + std::to_string(kx) + ") with sqrt(" +
                        std::to_string(ky) + ")");
  return kx;
}

}  // namespace

Scalar operator+(const Scalar &x, const Scalar &y) {
  if (x.exact_ && y.exact_) {
    long k = common_field(x, y);
    return Scalar::quad(x.a_ + y.a_, x.b_ + y.b_, k);
  }
  Scalar ix = x.to_interval_scalar(Scalar::kEnclosureBits);
  Scalar iy = y.to_interval_scalar(Scalar::kEnclosureBits);
  Scalar r = Scalar::interval(ix.lo_ + iy.lo_, ix.hi_ + iy.hi_);
  r.round_outward();
  return r;
}

Scalar operator-(const Scalar &x, const Scalar &y) { return x + (-y); }

Scalar operator*(const Scalar &x, const Scalar &y) {
  if (x.exact_ && y.exact_) {
    long k = common_field(x, y);
    // (a1 + b1 r)(a2 + b2 r) with r^2 = k
    Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(k);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return Scalar::quad(a, b, k);
  }
  Scalar ix = x.to_interval_scalar(Scalar::kEnclosureBits);
  Scalar iy = y.to_interval_scalar(Scalar::kEnclosureBits);
  Rational p1 = ix.lo_ * iy.lo_, p2 = ix.lo_ * iy.hi_;
  Rational p3 = ix.hi_ * iy.lo_, p4 = ix.hi_ * iy.hi_;
  Rational lo = min(min(p1, p2), min(p3, p4));
  Rational hi = max(max(p1, p2), max(p3, p4));
  Scalar r = Scalar::interval(lo, hi);
  r.round_outward();
  return r;
}

Scalar operator/(const Scalar &x, const Scalar &y) {
  if (x.exact_ && y.exact_) {
    long k = common_field(x, y);
    // 1/(a + b r) = (a - b r)/(a^2 - b^2 k)
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(k);
    if (norm.is_zero()) throw DivisionByZero("division by zero scalar");
    Scalar conj = Scalar::quad(y.a_ / norm, -y.b_ / norm, k);
    return x * conj;
  }
  Scalar iy = y.to_interval_scalar(Scalar::kEnclosureBits);
  if (iy.lo_.sign() <= 0 && iy.hi_.sign() >= 0)
    throw Indeterminate("division by interval containing zero");
  Scalar inv = Scalar::interval(Rational(1) / iy.hi_, Rational(1) / iy.lo_);
  return x * inv;
}

int Scalar::sign() const {
  if (exact_) {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // a and b*sqrt(k) compete; compare a^2 against b^2 k.
    int cmp_sq = (a_ * a_ > b_ * b_ * Rational(k_)) ? 1 : ((a_ * a_ < b_ * b_ * Rational(k_)) ? -1 : 0);
    if (cmp_sq == 0) return 0;  // cannot happen for square-free k, kept for safety
    return cmp_sq > 0 ? sa : sb;
  }
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (lo_.is_zero() && hi_.is_zero()) return 0;
  throw Indeterminate("sign of interval [" + lo_.str() + ", " + hi_.str() + "] straddling zero");
}

int Scalar::sign_lenient() const {
  if (exact_) return sign();
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (width() <= cert_eps()) return 0;
  Rational mid = (lo_ + hi_) / Rational(2);
  return mid.sign();
}

int Scalar::certified_sign(Cert &cert) const {
  if (exact_) return sign();
  cert = Cert::Within;
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (width() <= cert_eps()) return 0;
  throw Indeterminate("interval [" + lo_.str() + ", " + hi_.str() +
                      "] too wide to certify a sign (width " + width().str() + ")");
}

bool Scalar::identical(const Scalar &other) const {
  if (exact_ != other.exact_) return false;
  if (exact_) return a_ == other.a_ && b_ == other.b_ && k_ == other.k_;
  return lo_ == other.lo_ && hi_ == other.hi_;
}

double Scalar::to_double() const {
  if (exact_) {
    if (b_.is_zero()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(k_));
  }
  return ((lo_ + hi_) / Rational(2)).to_double();
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (exact_) {
    if (b_.is_zero()) return a_.str();
    if (!a_.is_zero()) os << a_.str() << (b_.sign() > 0 ? "+" : "");
    os << b_.str() << "*sqrt(" << k_ << ")";
    return os.str();
  }
  Rational mid = (lo_ + hi_) / Rational(2);
  Rational half = (hi_ - lo_) / Rational(2);
  os << mid.to_double() << " ± " << half.to_double();
  return os.str();
}

int cmp3(const Scalar &x, const Scalar &y, Cert &cert) {
  return (x - y).certified_sign(cert);
}

Scalar sqrt_enclosure(const Rational &x, unsigned prec_bits) {
  if (x.sign() < 0) throw Error("sqrt of negative rational");
  if (x.is_zero()) return Scalar::interval(Rational(0), Rational(0));
  // floor(sqrt(x * 4^p)) / 2^p brackets sqrt(x) from below.
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * prec_bits);
  mpz_class scaled_num = x.num() * scale;
  mpz_class t = scaled_num / x.den();  // floor
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec_bits);
  Rational lo(root, den);
  Rational hi(root + 1, den);
  return Scalar::interval(lo, hi);
}

Scalar cos_pi_frac(const Rational &x, unsigned prec_bits) {
  // Reduce to [0, 1/2] using period and parity, then a Taylor enclosure.
  Rational t = x;
  // t mod 2 in [0, 2)
  {
    mpz_class fl;
    mpz_class num2 = t.num();
    mpz_class den2 = t.den() * 2;
    mpz_fdiv_q(fl.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    t = t - Rational(mpz_class(fl * 2));
  }
  if (t > Rational(1)) t = Rational(2) - t;       // cos(pi(2-t)) = cos(pi t)
  bool negate = false;
  if (t > Rational(1, 2)) {                        // cos(pi t) = -cos(pi(1-t))
    t = Rational(1) - t;
    negate = true;
  }
  // theta = pi * t in [0, pi/2]
  Scalar theta = Scalar::interval(pi_lower() * t, pi_upper() * t);
  Scalar theta_sq = theta * theta;
  Scalar sum = Scalar::interval(Rational(1), Rational(1));
  Scalar term = Scalar::interval(Rational(1), Rational(1));
  const int kTerms = 40;
  for (int i = 1; i < kTerms; ++i) {
    term = term * theta_sq / Scalar(Rational(2L * i - 1) * Rational(2L * i));
    sum = (i % 2 == 1) ? sum - term : sum + term;
  }
  // Alternating-series remainder: |R| <= sup(theta)^(2N) / (2N)!
  Rational sup_theta = theta.sup();
  Rational pow = Rational(1);
  Rational fact = Rational(1);
  for (int i = 1; i <= 2 * kTerms; ++i) {
    pow = pow * sup_theta;
    fact = fact * Rational(i);
  }
  Rational rem = pow / fact;
  Scalar enclosed = Scalar::interval(sum.inf() - rem, sum.sup() + rem);
  if (negate) enclosed = -enclosed;
  // Clamp to [-1, 1]; cos cannot leave it.
  Rational lo = max(enclosed.inf(), Rational(-1));
  Rational hi = min(enclosed.sup(), Rational(1));
  unsigned bits = std::min(prec_bits, Scalar::kRoundBits);
  return Scalar::interval(lo.floor_to_dyadic(bits), hi.ceil_to_dyadic(bits));
}

Scalar dot(const Vec &x, const Vec &y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot: size mismatch");
  Scalar acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

bool vec_is_exact(const Vec &v) {
  for (const auto &s : v)
    if (!s.is_exact()) return false;
  return true;
}

}  // namespace gptbox
