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

#include <array>
#include <cmath>
#include <optional>

#include "gptbox/linalg.hpp"
#include "gptbox/quantum.hpp"

namespace gptbox::zoo {

namespace {

// cos(2*pi/n) when it lives in a quadratic field.
std::optional<Scalar> exact_cos_2pi_over(int n) {
  switch (n) {
    case 3: return Scalar(Rational(-1, 2));
    case 4: return Scalar(0);
    case 5: return Scalar::quad(Rational(-1, 4), Rational(1, 4), 5);
    case 6: return Scalar(Rational(1, 2));
    case 8: return Scalar::quad(Rational(0), Rational(1, 2), 2);
    case 10: return Scalar::quad(Rational(1, 4), Rational(1, 4), 5);
    case 12: return Scalar::quad(Rational(0), Rational(1, 2), 3);
    default: return std::nullopt;
  }
}

// Pairing matrix (a_l | phi_s) of the regular n-gon.  Everything is a
// polynomial in c = cos(2*pi/n):
//   even n: (a_l|phi_s) = (R_{2m-1} + 1)/2 with m = l - s mod n and
//           R_j := cos(j*pi/n)/cos(pi/n), R_{j+2} = 2c R_j - R_{j-2};
//   odd n:  (a_l|phi_s) = (T_m + g)/(1 + g) with T_m = cos(2m*pi/n) and
//           g = cos(pi/n) = -T_{(n-1)/2}.
Mat polygon_pairing_matrix(int n, const Scalar &c) {
  Mat pairing(n, Vec(n, Scalar(0)));
  if (n % 2 == 0) {
    // Odd-index table R_j for j = 1, 3, ..., 2n-1 (R_{-1} = R_1 = 1).
    std::vector<Scalar> r{Scalar(1), Scalar(1)};  // r[0] ~ R_{-1}, r[1] ~ R_1
    for (int j = 3; j <= 2 * n - 1; j += 2)
      r.push_back(Scalar(2) * c * r[r.size() - 1] - r[r.size() - 2]);
    auto r_at = [&](int j) {  // j odd, possibly negative
      int a = std::abs(j);
      return r[(a + 1) / 2];
    };
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < n; ++s) {
        int m = ((l - s) % n + n) % n;
        pairing[l][s] = (r_at(2 * m - 1) + Scalar(1)) / Scalar(2);
      }
  } else {
    std::vector<Scalar> t{Scalar(1), c};  // Chebyshev T_0, T_1
    for (int j = 2; j < n; ++j) t.push_back(Scalar(2) * c * t[j - 1] - t[j - 2]);
    Scalar g = -t[(n - 1) / 2];
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < n; ++s) {
        int m = ((l - s) % n + n) % n;
        pairing[l][s] = (t[m] + g) / (Scalar(1) + g);
      }
  }
  return pairing;
}

}  // namespace

SystemPtr classical_system(int n) {
  if (n < 2) throw PreconditionError("classical_system: n must be >= 2");
  auto sys = std::make_shared<GptSystem>();
  sys->name = "classical-" + std::to_string(n);
  sys->dim = n;
  sys->field_k = 1;
  for (int i = 0; i < n; ++i) {
    Vec e(n, Scalar(0));
    e[i] = Scalar(1);
    sys->pure_states.push_back(e);
    sys->effect_generators.push_back(e);
    sys->state_labels.push_back("e" + std::to_string(i + 1));
    sys->effect_labels.push_back("d" + std::to_string(i + 1));
  }
  sys->unit.assign(n, Scalar(1));
  sys->effect_generators.push_back(sys->unit);
  sys->effect_labels.push_back("u");
  sys->validate();
  return sys;
}

SystemPtr square_bit() {
  auto sys = std::make_shared<GptSystem>();
  sys->name = "square-bit";
  sys->dim = 3;
  sys->field_k = 2;
  Scalar r2 = Scalar::sqrt_int(2);
  Scalar half(Rational(1, 2));
  Scalar quarter_r2 = r2 / Scalar(4);
  // phi_y = (r^2 cos(2 pi y/4), r^2 sin(2 pi y/4), 1), y = 1..4
  sys->pure_states = {
      {Scalar(0), r2, Scalar(1)},   // phi_1
      {-r2, Scalar(0), Scalar(1)},  // phi_2
      {Scalar(0), -r2, Scalar(1)},  // phi_3
      {r2, Scalar(0), Scalar(1)},   // phi_4
  };
  // a_y = (cos((2y-1)pi/4)/2, sin((2y-1)pi/4)/2, 1/2)
  sys->effect_generators = {
      {quarter_r2, quarter_r2, half},    // a_1
      {-quarter_r2, quarter_r2, half},   // a_2
      {-quarter_r2, -quarter_r2, half},  // a_3
      {quarter_r2, -quarter_r2, half},   // a_4
  };
  sys->unit = {Scalar(0), Scalar(0), Scalar(1)};
  sys->state_labels = {"phi1", "phi2", "phi3", "phi4"};
  sys->effect_labels = {"a1", "a2", "a3", "a4"};
  sys->validate();
  return sys;
}

SystemPtr polygon_system(int n, unsigned prec_bits) {
  if (n < 3) throw PreconditionError("polygon_system: n must be >= 3");
  Scalar c;
  long field = 1;
  if (auto exact = exact_cos_2pi_over(n)) {
    c = *exact;
    field = c.field();
  } else {
    c = cos_pi_frac(Rational(2, n), prec_bits);
  }
  Mat pairing = polygon_pairing_matrix(n, c);

  // Coordinates in the frame of three basis states: an effect is the row of
  // its pairings with the basis; a state solves the 3x3 frame system.
  const std::array<int, 3> basis = {0, 1, 2};
  Mat frame(3, Vec(3, Scalar(0)));
  int f0 = -1, f1 = -1, f2 = -1;
  for (int i = 0; i < n && f0 < 0; ++i)
    for (int j = i + 1; j < n && f0 < 0; ++j)
      for (int k = j + 1; k < n && f0 < 0; ++k) {
        Mat m(3, Vec(3));
        for (int r = 0; r < 3; ++r) {
          int eff = r == 0 ? i : (r == 1 ? j : k);
          for (int col = 0; col < 3; ++col) m[r][col] = pairing[eff][basis[col]];
        }
        if (gauss_solve(m, Vec{Scalar(1), Scalar(0), Scalar(0)}).has_value()) {
          f0 = i;
          f1 = j;
          f2 = k;
          frame = m;
        }
      }
  if (f0 < 0) throw Error("polygon_system: no invertible effect frame found");

  auto sys = std::make_shared<GptSystem>();
  sys->name = "polygon-" + std::to_string(n);
  sys->dim = 3;
  sys->field_k = field;
  for (int s = 0; s < n; ++s) {
    Vec rhs = {pairing[f0][s], pairing[f1][s], pairing[f2][s]};
    auto coords = gauss_solve(frame, rhs);
    if (!coords) throw Error("polygon_system: frame solve failed");
    sys->pure_states.push_back(*coords);
    sys->state_labels.push_back("phi" + std::to_string(s));
  }
  for (int l = 0; l < n; ++l) {
    sys->effect_generators.push_back(
        Vec{pairing[l][basis[0]], pairing[l][basis[1]], pairing[l][basis[2]]});
    sys->effect_labels.push_back("a" + std::to_string(l));
  }
  sys->unit = {Scalar(1), Scalar(1), Scalar(1)};

  // The frame coordinatization must reproduce the whole pairing table.
  Cert cert = Cert::Exact;
  for (int l = 0; l < n; ++l)
    for (int s = 0; s < n; ++s)
      if (cmp3(dot(sys->effect_generators[l], sys->pure_states[s]), pairing[l][s], cert) != 0)
        throw Error("polygon_system: frame coordinates do not reproduce the pairings");
  sys->validate();
  return sys;
}

std::pair<int, int> polygon_critical_pair(int n, int base_index) {
  if (n < 4) throw PreconditionError("polygon_critical_pair: defined for n >= 4");
  int offset = (n % 2 == 1) ? (n + 1) / 2 : n / 2 + 1;
  return {base_index % n, (base_index + offset) % n};
}

Behavior pr_box() {
  Behavior b;
  b.sc.inputs = {2, 2};
  b.sc.outputs = {2, 2};
  b.table.assign(16, Scalar(0));
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2)
          if ((y1 ^ y2) == (x1 & x2))
            b.p(b.sc.flat_input({x1, x2}), b.sc.flat_output({y1, y2})) = Scalar(Rational(1, 2));
  b.validate();
  return b;
}

NonlocalGame chsh_game() {
  NonlocalGame g;
  g.sc.inputs = {2, 2};
  g.sc.outputs = {2, 2};
  g.input_dist.assign(4, Scalar(Rational(1, 4)));
  g.payoff_table.assign(16, Scalar(0));
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2)
          if ((y1 ^ y2) == (x1 & x2))
            g.payoff_table[g.sc.flat_input({x1, x2}) * 4 + g.sc.flat_output({y1, y2})] = Scalar(1);
  g.validate();
  return g;
}

Behavior tsirelson_behavior() {
  using quantum::CMat;
  using quantum::CVec;
  auto proj_at = [](double theta) {
    CVec v(2);
    v << std::cos(theta), std::sin(theta);
    CMat p = v * v.adjoint();
    return p;
  };
  auto binary_povm = [&](double theta) {
    quantum::Povm m;
    m.elements = {proj_at(theta), CMat::Identity(2, 2) - proj_at(theta)};
    return m;
  };
  CVec phi_plus(4);
  phi_plus << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  auto rho = quantum::DensityMatrix::pure(phi_plus);
  const double pi = std::acos(-1.0);
  std::vector<std::vector<quantum::Povm>> povms = {
      {binary_povm(0.0), binary_povm(pi / 4)},
      {binary_povm(pi / 8), binary_povm(-pi / 8)},
  };
  return quantum::behavior_from_quantum(rho, povms);
}

Verdict appendix_d_inequality(int n) {
  if (n % 2 == 0) throw PreconditionError("appendix_d_inequality: n must be odd");
  if (n < 3) throw PreconditionError("appendix_d_inequality: n must be >= 3");
  auto sys = polygon_system(n);

  Verdict v;
  v.certainty = sys->is_exact() ? Cert::Exact : Cert::Within;
  Cert cert = v.certainty;
  int offset = (n + 1) / 2;
  std::optional<int> sign;
  Scalar s_value;
  for (int y = 0; y < n; ++y) {
    int prev = (y + n - 1) % n;
    Scalar s = dot(sys->effect_generators[y], sys->pure_states[prev]) +
               dot(sys->effect_generators[(y + offset) % n], sys->pure_states[prev]);
    int sg = cmp3(s, Scalar(1), cert);
    if (!sign) {
      sign = sg;
      s_value = s;
    } else if (*sign != sg) {
      throw Error("appendix_d_inequality: pairing sum is not rotation invariant");
    }
  }

  // Independent trigonometric route: 2 cos(3pi/2n) cos(pi/2n) - 2 cos(3pi/2n)^2.
  Scalar c3 = cos_pi_frac(Rational(3, 2L * n));
  Scalar c1 = cos_pi_frac(Rational(1, 2L * n));
  Scalar diff = Scalar(2) * c3 * c1 - Scalar(2) * c3 * c3;
  Cert raw_cert = Cert::Within;
  int raw_sign = diff.certified_sign(raw_cert);
  if ((raw_sign > 0) != (*sign > 0))
    throw Error("appendix_d_inequality: trigonometric and pairing routes disagree");

  v.holds = *sign > 0;
  v.certainty = cert;
  v.note = "s = " + s_value.str() + (v.holds ? " > 1" : " <= 1");
  return v;
}

}  // namespace gptbox::zoo
