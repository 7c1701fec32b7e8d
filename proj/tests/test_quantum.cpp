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

#include "gptbox/quantum.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "gptbox/zoo.hpp"

using namespace gptbox;
using namespace gptbox::quantum;

namespace {

CMat basis_proj(int dim, int k) {
  CMat p = CMat::Zero(dim, dim);
  p(k, k) = 1.0;
  return p;
}

std::mt19937 &rng() {
  static std::mt19937 gen(20260101);
  return gen;
}

CMat random_ginibre(int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = std::complex<double>(n(rng()), n(rng()));
  return g;
}

Povm random_povm(int dim, int outcomes) {
  std::vector<CMat> raw;
  CMat total = CMat::Zero(dim, dim);
  for (int y = 0; y < outcomes; ++y) {
    CMat g = random_ginibre(dim, dim);
    raw.push_back(g.adjoint() * g);
    total += raw.back();
  }
  CMat inv_root = sqrt_psd(total).inverse();
  Povm m;
  for (const auto &e : raw) m.elements.push_back(inv_root * e * inv_root);
  // Symmetrize away the numerical skew.
  for (auto &e : m.elements) e = ((e + e.adjoint()) / 2.0).eval();
  m.validate();
  return m;
}

DensityMatrix random_state(int dim) {
  CMat g = random_ginibre(dim, dim);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{rho};
}

}  // namespace

TEST_CASE("born rule basics") {
  auto rho0 = DensityMatrix::pure((CVec(2) << 1, 0).finished());
  CHECK(born(basis_proj(2, 0), rho0) == doctest::Approx(1.0));
  CHECK(born(CMat::Identity(2, 2), rho0) == doctest::Approx(1.0));
  auto plus = DensityMatrix::pure((CVec(2) << 1, 1).finished());
  CHECK(born(plus.m, rho0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(born(CMat::Identity(3, 3), rho0), DimensionMismatch);
}

TEST_CASE("born is linear in the state") {
  auto r1 = random_state(3), r2 = random_state(3);
  CMat e = random_povm(3, 2).elements[0];
  double alpha = 0.3;
  DensityMatrix mix{alpha * r1.m + (1 - alpha) * r2.m};
  CHECK(born(e, mix) ==
        doctest::Approx(alpha * born(e, r1) + (1 - alpha) * born(e, r2)).epsilon(1e-10));
}

TEST_CASE("projectivity") {
  Povm comp{{basis_proj(3, 0), basis_proj(3, 1), basis_proj(3, 2)}};
  CHECK(is_projective(comp));
  // Two-outcome projective measurement {|0><0|, |1><1| + |2><2|}.
  Povm two{{basis_proj(3, 0), basis_proj(3, 1) + basis_proj(3, 2)}};
  CHECK(is_projective(two));
  // Trine POVM: not projective.
  Povm trine;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 3; ++k) {
    CVec v(2);
    v << std::cos(2 * pi * k / 3), std::sin(2 * pi * k / 3);
    trine.elements.push_back(2.0 / 3.0 * (v * v.adjoint()));
  }
  trine.validate();
  CHECK(!is_projective(trine));
}

TEST_CASE("naimark dilation of the trine POVM") {
  Povm trine;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 3; ++k) {
    CVec v(2);
    v << std::cos(2 * pi * k / 3), std::sin(2 * pi * k / 3);
    trine.elements.push_back(2.0 / 3.0 * (v * v.adjoint()));
  }
  auto dil = naimark_dilate(trine);
  CHECK(dil.ancilla_dim == 3);
  // The dilation measurement is projective and complete.
  CMat sum = CMat::Zero(6, 6);
  for (const auto &m : dil.projectors) {
    CHECK(approx_equal(m * m, m, 1e-8));
    sum += m;
  }
  CHECK(approx_equal(sum, CMat::Identity(6, 6), 1e-8));
  CHECK(naimark_reproduces(dil, trine));
}

TEST_CASE("naimark dilation of an already projective POVM") {
  Povm comp{{basis_proj(2, 0), basis_proj(2, 1)}};
  auto dil = naimark_dilate(comp);
  CHECK(naimark_reproduces(dil, comp));
}

TEST_CASE("naimark dilation of the uniform-noise POVM measures the ancilla") {
  int n = 3;
  Povm noise;
  for (int y = 0; y < n; ++y) noise.elements.push_back(CMat::Identity(2, 2) / double(n));
  auto dil = naimark_dilate(noise);
  CHECK(naimark_reproduces(dil, noise));
  // Statistics are state-independent: 1/n for every outcome.
  for (const auto &rho : tomographic_frame(2)) {
    DensityMatrix joint{kron(rho.m, dil.ancilla_state * dil.ancilla_state.adjoint())};
    for (int y = 0; y < n; ++y)
      CHECK(born(dil.projectors[y], joint) == doctest::Approx(1.0 / n).epsilon(1e-8));
  }
}

TEST_CASE("naimark reproduction over random POVMs") {
  for (int trial = 0; trial < 12; ++trial) {
    int dim = 2 + trial % 3;
    int outcomes = 2 + trial % 4;
    Povm m = random_povm(dim, outcomes);
    auto dil = naimark_dilate(m);
    CHECK(naimark_reproduces(dil, m));
  }
}

TEST_CASE("lueders binary test") {
  // P = I: outcome 0 is the identity channel.
  auto t_id = luders_binary_test(CMat::Identity(2, 2));
  auto rho = random_state(2);
  auto out = instrument_apply(t_id, rho);
  CHECK(approx_equal(out[0].m, rho.m));
  CHECK(out[1].m.norm() <= 1e-12);

  // P = 0: outcome 1 is the identity channel.
  auto t_zero = luders_binary_test(CMat::Zero(2, 2));
  auto out0 = instrument_apply(t_zero, rho);
  CHECK(approx_equal(out0[1].m, rho.m));

  // P = |0><0| on |+><+|: probabilities 1/2, post-states |0><0| and |1><1|.
  auto t = luders_binary_test(basis_proj(2, 0));
  auto plus = DensityMatrix::pure((CVec(2) << 1, 1).finished());
  auto post = instrument_apply(t, plus);
  CHECK(post[0].m.trace().real() == doctest::Approx(0.5));
  CHECK(post[1].m.trace().real() == doctest::Approx(0.5));
  CHECK(approx_equal(2.0 * post[0].m, basis_proj(2, 0), 1e-9));
  CHECK(approx_equal(2.0 * post[1].m, basis_proj(2, 1), 1e-9));

  CHECK_THROWS(luders_binary_test(0.5 * basis_proj(2, 0)));
}

TEST_CASE("sequential discriminator on the qutrit basis") {
  std::vector<CMat> projs = {basis_proj(3, 0), basis_proj(3, 1), basis_proj(3, 2)};
  Povm m = sequential_discriminator(projs);
  CHECK(m.outcomes() == 3);  // complete family: no rest outcome
  for (int i = 0; i < 3; ++i) {
    CVec e = CVec::Zero(3);
    e(i) = 1.0;
    auto rho = DensityMatrix::pure(e);
    for (int j = 0; j < 3; ++j)
      CHECK(born(m.elements[j], rho) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
  }
}

TEST_CASE("sequential discriminator on rank-2 subspaces of dim 4") {
  CMat p1 = basis_proj(4, 0) + basis_proj(4, 1);
  CMat p2 = basis_proj(4, 2) + basis_proj(4, 3);
  Povm m = sequential_discriminator({p1, p2});
  CHECK(m.outcomes() == 2);
  // Mixed states inside each range are discriminated perfectly.
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int trial = 0; trial < 5; ++trial) {
    double a = u(rng());
    CMat in1 = a * basis_proj(4, 0) + (1 - a) * basis_proj(4, 1);
    CMat in2 = a * basis_proj(4, 2) + (1 - a) * basis_proj(4, 3);
    CHECK(born(m.elements[0], DensityMatrix{in1}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(born(m.elements[1], DensityMatrix{in1}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(born(m.elements[0], DensityMatrix{in2}) == doctest::Approx(0.0).epsilon(1e-9));
  }
  // Single projector: binary measurement {P, I-P}.
  Povm bin = sequential_discriminator({p1});
  CHECK(bin.outcomes() == 2);
  CHECK(approx_equal(bin.elements[1], p2));
  // Non-orthogonal input is rejected.
  CHECK_THROWS(sequential_discriminator({p1, basis_proj(4, 1) + basis_proj(4, 2)}));
}

TEST_CASE("sequential discriminator composes to a valid POVM on random families") {
  for (int trial = 0; trial < 10; ++trial) {
    int dim = 3 + trial % 2;
    // Random orthogonal projector family from a Haar-ish unitary.
    CMat g = random_ginibre(dim, dim);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    std::vector<CMat> projs;
    for (int c = 0; c + 1 < dim; c += 2)
      projs.push_back(q.col(c) * q.col(c).adjoint() + q.col(c + 1) * q.col(c + 1).adjoint());
    Povm m = sequential_discriminator(projs);  // validate() runs inside
    for (size_t i = 0; i < projs.size(); ++i) {
      // Identity discrimination on range-supported states.
      DensityMatrix rho{projs[i] / projs[i].trace().real()};
      for (size_t j = 0; j < projs.size(); ++j)
        CHECK(born(m.elements[j], rho) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("behavior from quantum: product states factorize") {
  Povm za{{basis_proj(2, 0), basis_proj(2, 1)}};
  auto rho = DensityMatrix{kron(basis_proj(2, 0), 0.5 * CMat::Identity(2, 2))};
  auto b = behavior_from_quantum(rho, {{za}, {za}});
  // p(y1,y2) = [y1==0] * 1/2
  CHECK(b.p(0, b.sc.flat_output({0, 0})).midpoint().to_double() == doctest::Approx(0.5));
  CHECK(b.p(0, b.sc.flat_output({1, 0})).midpoint().to_double() == doctest::Approx(0.0));
  CHECK(is_no_signalling(b).holds);
}

TEST_CASE("behavior from the maximally mixed state is product of traces") {
  auto mm = DensityMatrix::maximally_mixed(4);
  Povm pa = random_povm(2, 3);
  Povm pb = random_povm(2, 2);
  auto b = behavior_from_quantum(mm, {{pa}, {pb}});
  for (int y1 = 0; y1 < 3; ++y1)
    for (int y2 = 0; y2 < 2; ++y2) {
      double expect = pa.elements[y1].trace().real() / 2.0 *
                      pb.elements[y2].trace().real() / 2.0;
      CHECK(b.p(0, b.sc.flat_output({y1, y2})).midpoint().to_double() ==
            doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("tsirelson CHSH payoff and LO levels") {
  auto b = zoo::tsirelson_behavior();
  auto game = zoo::chsh_game();
  double expect = (2.0 + std::sqrt(2.0)) / 4.0;
  CHECK(std::abs(payoff(game, b).midpoint().to_double() - expect) < 1e-9);
  CHECK(is_no_signalling(b).holds);
  auto r1 = check_lo(b, 1);
  CHECK(r1.satisfied);
  CHECK(r1.certainty == Cert::Within);
  CHECK(r1.max_clique_value.sup() <= Rational(1) + Rational(1, 1000000000));
  auto r2 = check_lo(b, 2);
  CHECK(r2.satisfied);
  CHECK(r2.max_clique_value.sup() <= Rational(1) + Rational(1, 1000000000));
}

TEST_CASE("pq weight on a complete qutrit edge") {
  auto h = std::make_shared<Hypergraph>();
  h->vertices = {"0", "1", "2"};
  h->edges = {{0, 1, 2}};
  std::vector<CMat> assign = {basis_proj(3, 0), basis_proj(3, 1), basis_proj(3, 2)};
  auto pq = pq_weight(h, assign, DensityMatrix::maximally_mixed(3));
  CHECK(pq.completion_vertices == 0);
  for (int i = 0; i < 3; ++i)
    CHECK(pq.weight.w[i].midpoint().to_double() == doctest::Approx(1.0 / 3).epsilon(1e-9));
}

TEST_CASE("KCBS pentagram weights") {
  // Five qutrit rank-1 projectors with adjacent orthogonality.
  const double pi = std::acos(-1.0);
  double c = std::cos(pi / 5);
  double cos_theta = std::sqrt(c / (1 + c));
  double sin_theta = std::sqrt(1 - c / (1 + c));
  auto h = std::make_shared<Hypergraph>();
  std::vector<CMat> assign;
  for (int j = 0; j < 5; ++j) {
    h->vertices.push_back("v" + std::to_string(j));
    double phi = 4 * pi * j / 5;
    CVec v(3);
    v << sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta;
    assign.push_back(v * v.adjoint());
  }
  for (int j = 0; j < 5; ++j) h->edges.push_back({j, (j + 1) % 5});

  CVec top(3);
  top << 0, 0, 1;
  auto pq = pq_weight(h, assign, DensityMatrix::pure(top));
  CHECK(pq.completion_vertices == 5);  // each edge needs its rest projector
  double expect = 1.0 / std::sqrt(5.0);
  for (int j = 0; j < 5; ++j)
    CHECK(pq.weight.w[j].midpoint().to_double() == doctest::Approx(expect).epsilon(1e-9));

  // Original edge sums stay below 1 (2/sqrt 5), and CE1 holds on the
  // completed test space.
  for (int j = 0; j < 5; ++j) {
    double sum = pq.weight.w[j].midpoint().to_double() +
                 pq.weight.w[(j + 1) % 5].midpoint().to_double();
    CHECK(sum == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(sum < 1.0);
  }
  auto rep = check_ce(pq.weight, 1);
  CHECK(rep.satisfied);

  // Shared-projector consistency: one assignment map means one weight.
  auto h2 = std::make_shared<Hypergraph>();
  h2->vertices = {"s", "a", "b"};
  h2->edges = {{0, 1}, {0, 2}};
  std::vector<CMat> assign2 = {basis_proj(3, 0), basis_proj(3, 1), basis_proj(3, 2)};
  auto pq2 = pq_weight(h2, assign2, random_state(3));
  CHECK(pq2.weight.w[0].midpoint() == pq2.weight.w[0].midpoint());
}

TEST_CASE("pq weight rejects non-orthogonal edges") {
  auto h = std::make_shared<Hypergraph>();
  h->vertices = {"0", "1"};
  h->edges = {{0, 1}};
  CVec plus(2);
  plus << 1, 1;
  std::vector<CMat> assign = {basis_proj(2, 0), DensityMatrix::pure(plus).m};
  CHECK_THROWS(pq_weight(h, assign, DensityMatrix::maximally_mixed(2)));
}

TEST_CASE("quantum measurement-class delegates") {
  // Orthogonal rank-2 projectors that cannot coexist in one measurement.
  CMat p1 = basis_proj(3, 0) + basis_proj(3, 1);
  CMat p2 = basis_proj(3, 0) + basis_proj(3, 2);
  CHECK(!quantum::mutually_exclusive({p1, p2}));
  CHECK(quantum::mutually_exclusive({basis_proj(3, 1), basis_proj(3, 2)}));

  CHECK(quantum::is_pure_effect(basis_proj(2, 0)));
  CHECK(quantum::is_pure_effect(0.5 * basis_proj(2, 0)));
  CHECK(!quantum::is_pure_effect(CMat::Identity(2, 2)));

  CHECK(quantum::identifies_pure_state(basis_proj(2, 0)));
  CHECK(!quantum::identifies_pure_state(0.5 * basis_proj(2, 0)));

  // p|0><0| with p = 1/2 is pure but not extremal; the identity is extremal
  // but not pure.
  CHECK(!quantum::is_extremal_effect(0.5 * basis_proj(2, 0)));
  CHECK(quantum::is_extremal_effect(CMat::Identity(2, 2)));
  CHECK(quantum::is_extremal_effect(CMat::Zero(2, 2)));
}

TEST_CASE("trivial POVM construction reproduces any probability weight") {
  // P^x_y := w(y) I realizes every response-non-contextual table with
  // unrestricted POVMs, for any state and dimension.
  auto h = std::make_shared<Hypergraph>();
  for (int i = 0; i < 5; ++i) h->vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < 5; ++i) h->edges.push_back({i, (i + 1) % 5});
  Vec w(5, Scalar(Rational(1, 2)));
  REQUIRE(is_probability_weight(w, *h).holds);

  auto rho = random_state(2);
  for (const auto &edge : h->edges) {
    Povm m;
    for (int v : edge) m.elements.push_back(0.5 * CMat::Identity(2, 2));
    m.validate();
    for (size_t pos = 0; pos < edge.size(); ++pos)
      CHECK(born(m.elements[pos], rho) == doctest::Approx(0.5).epsilon(1e-12));
  }
}
