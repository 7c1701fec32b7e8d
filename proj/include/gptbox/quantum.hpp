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

#ifndef GPTBOX_QUANTUM_HPP
#define GPTBOX_QUANTUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gptbox/behavior.hpp"
#include "gptbox/hypergraph.hpp"

namespace gptbox::quantum {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Global tolerance of the floating-point backend.  All comparisons are of
/// the form |lhs - rhs| <= kTol * max(1, scale).
inline constexpr double kTol = 1e-9;

/// Width padding when exporting floating-point probabilities as certified
/// interval scalars (numerical error is ~1e-15 at desk scale).
Rational interval_pad();

struct DensityMatrix {
  CMat m;
  int dim() const { return static_cast<int>(m.rows()); }
  /// Hermitian, PSD, unit trace, all within kTol.
  void validate() const;
  static DensityMatrix pure(const CVec &psi);
  static DensityMatrix maximally_mixed(int dim);
};

struct Povm {
  std::vector<CMat> elements;
  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements.front().rows()); }
  int outcomes() const { return static_cast<int>(elements.size()); }
  /// Each element Hermitian PSD, sum = identity, within kTol.
  void validate() const;
};

/// Per-outcome Kraus decompositions of a test.
struct Instrument {
  int dim_in = 0, dim_out = 0;
  std::vector<std::vector<CMat>> kraus;  // kraus[outcome] = operators
  bool deterministic = false;            // trace-preserving overall
  void validate() const;
};

struct NaimarkDilation {
  int system_dim = 0;
  int ancilla_dim = 0;
  CVec ancilla_state;            // |0> of the ancilla
  CMat unitary;                  // W on system (x) ancilla
  std::vector<CMat> projectors;  // M_y = W^dag (I (x) |y><y|) W
};

bool approx_hermitian(const CMat &a, double tol = kTol);
bool approx_psd(const CMat &a, double tol = kTol);
bool approx_equal(const CMat &a, const CMat &b, double tol = kTol);
CMat kron(const CMat &a, const CMat &b);

/// Tr[P rho], clamped to [0,1]; imaginary part or range excess beyond kTol
/// is an error.
double born(const CMat &effect, const DensityMatrix &rho);

/// p(y|x) = Tr[(P^{1,x_1} (x) ... (x) P^{N,x_N}) rho], exported with
/// interval padding so downstream exact checkers stay honest.
Behavior behavior_from_quantum(const DensityMatrix &rho,
                               const std::vector<std::vector<Povm>> &povms);

/// Idempotent elements with pairwise vanishing products.
bool is_projective(const Povm &m);

/// Projective dilation on system (x) ancilla with the ancilla prepared in
/// |0>: Tr[P_y rho] = Tr[M_y (rho (x) |0><0|)].
NaimarkDilation naimark_dilate(const Povm &m);

/// Checks the reproduction identity on a tomographically spanning frame.
bool naimark_reproduces(const NaimarkDilation &d, const Povm &m, double tol = kTol);

/// Lueders pair {P ., (I-P) .} as a deterministic binary instrument.
Instrument luders_binary_test(const CMat &projector);

/// Applies the instrument: per outcome the unnormalized post-state
/// sum_k K rho K^dag (its trace is the outcome probability).
std::vector<DensityMatrix> instrument_apply(const Instrument &t, const DensityMatrix &rho);

/// Composes the Lueders binary tests of pairwise orthogonal projectors one
/// after the other; the effective measurement discriminates states
/// supported in the respective ranges.  A nonzero rest outcome is appended.
Povm sequential_discriminator(const std::vector<CMat> &projectors);

/// The projective-quantum probability weight w(y) = Tr[P_y rho].  Edges
/// whose projectors do not sum to the identity are completed with one
/// fresh rest vertex each; the returned weight lives on the (possibly)
/// extended hypergraph.
struct PqWeight {
  ProbabilityWeight weight;
  HypergraphPtr hypergraph;  // the extended test space
  int completion_vertices = 0;
};
PqWeight pq_weight(const HypergraphPtr &h, const std::vector<CMat> &assignment,
                   const DensityMatrix &rho);

// Quantum instances of the measurement-class predicates.
bool mutually_exclusive(const std::vector<CMat> &effects);
bool is_pure_effect(const CMat &effect);         // rank-one positive, <= I
bool identifies_pure_state(const CMat &effect);  // rank-one with unit norm
bool is_extremal_effect(const CMat &effect);     // projector

/// d^2 pure states spanning the Hermitian operators on C^d.
std::vector<DensityMatrix> tomographic_frame(int dim);

/// Hermitian PSD square root (eigenvalues clamped at -kTol, error beyond).
CMat sqrt_psd(const CMat &a);

}  // namespace gptbox::quantum

#endif  // GPTBOX_QUANTUM_HPP
