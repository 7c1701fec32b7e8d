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

#include <algorithm>
#include <cmath>

namespace gptbox::quantum {

namespace {

using Cplx = std::complex<double>;

double max_abs(const CMat &a) { return a.cwiseAbs().maxCoeff(); }

Scalar padded_interval(double v) {
  Rational c = Rational::from_double(v);
  return Scalar::interval(c - interval_pad(), c + interval_pad());
}

}  // namespace

Rational interval_pad() {
  static const Rational pad(1, 1000000000000L);  // 1e-12
  return pad;
}

bool approx_hermitian(const CMat &a, double tol) {
  return max_abs(a - a.adjoint()) <= tol * std::max(1.0, max_abs(a));
}

bool approx_psd(const CMat &a, double tol) {
  if (!approx_hermitian(a, tol)) return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(a);
  return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, max_abs(a));
}

bool approx_equal(const CMat &a, const CMat &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol * std::max(1.0, std::max(max_abs(a), max_abs(b)));
}

CMat kron(const CMat &a, const CMat &b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void DensityMatrix::validate() const {
  if (m.rows() != m.cols()) throw DimensionMismatch("density matrix must be square");
  if (!approx_hermitian(m)) throw Error("density matrix not Hermitian within tolerance");
  if (!approx_psd(m)) throw Error("density matrix not positive semidefinite within tolerance");
  if (std::abs(m.trace().real() - 1.0) > kTol || std::abs(m.trace().imag()) > kTol)
    throw Error("density matrix trace differs from 1");
}

DensityMatrix DensityMatrix::pure(const CVec &psi) {
  double norm = psi.norm();
  if (norm < kTol) throw Error("cannot normalize the zero vector");
  CVec u = psi / norm;
  return DensityMatrix{u * u.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix{CMat::Identity(dim, dim) / static_cast<double>(dim)};
}

void Povm::validate() const {
  if (elements.empty()) throw Error("POVM with no elements");
  const int d = dim();
  CMat sum = CMat::Zero(d, d);
  for (const auto &p : elements) {
    if (p.rows() != d || p.cols() != d) throw DimensionMismatch("POVM element size mismatch");
    if (!approx_psd(p)) throw Error("POVM element not PSD within tolerance");
    sum += p;
  }
  if (!approx_equal(sum, CMat::Identity(d, d)))
    throw Error("POVM elements do not sum to the identity");
}

void Instrument::validate() const {
  CMat total = CMat::Zero(dim_in, dim_in);
  for (const auto &outcome : kraus)
    for (const auto &k : outcome) {
      if (k.cols() != dim_in || k.rows() != dim_out)
        throw DimensionMismatch("Kraus operator shape mismatch");
      total += k.adjoint() * k;
    }
  CMat gap = CMat::Identity(dim_in, dim_in) - total;
  Eigen::SelfAdjointEigenSolver<CMat> es(gap);
  if (es.eigenvalues().minCoeff() < -kTol)
    throw Error("instrument exceeds trace preservation");
  if (deterministic && max_abs(gap) > kTol)
    throw Error("deterministic instrument is not trace-preserving");
}

double born(const CMat &effect, const DensityMatrix &rho) {
  if (effect.rows() != rho.dim() || effect.cols() != rho.dim())
    throw DimensionMismatch("born: dimension mismatch");
  Cplx tr = (effect * rho.m).trace();
  if (std::abs(tr.imag()) > kTol) throw Error("born: non-real pairing beyond tolerance");
  double v = tr.real();
  if (v < -kTol || v > 1.0 + kTol) throw Error("born: probability outside [0,1] beyond tolerance");
  return std::clamp(v, 0.0, 1.0);
}

Behavior behavior_from_quantum(const DensityMatrix &rho,
                               const std::vector<std::vector<Povm>> &povms) {
  const int N = static_cast<int>(povms.size());
  if (N == 0) throw PreconditionError("behavior_from_quantum: no parties");
  rho.validate();

  Behavior b;
  long joint = 1;
  for (const auto &party : povms) {
    if (party.empty()) throw PreconditionError("behavior_from_quantum: party without inputs");
    int d = party.front().dim();
    int n_out = party.front().outcomes();
    for (const auto &m : party) {
      m.validate();
      if (m.dim() != d) throw DimensionMismatch("behavior_from_quantum: party dimension varies");
      if (m.outcomes() != n_out)
        throw DimensionMismatch("behavior_from_quantum: output alphabet varies with input");
    }
    b.sc.inputs.push_back(static_cast<int>(party.size()));
    b.sc.outputs.push_back(n_out);
    joint *= d;
  }
  if (joint != rho.dim())
    throw DimensionMismatch("behavior_from_quantum: state dimension mismatch");

  b.table.assign(b.sc.input_count() * b.sc.output_count(), Scalar(0));
  for (long xf = 0; xf < b.sc.input_count(); ++xf) {
    auto x = b.sc.unflatten_input(xf);
    for (long yf = 0; yf < b.sc.output_count(); ++yf) {
      auto y = b.sc.unflatten_output(yf);
      CMat effect = povms[0][x[0]].elements[y[0]];
      for (int i = 1; i < N; ++i) effect = kron(effect, povms[i][x[i]].elements[y[i]]);
      b.p(xf, yf) = padded_interval(born(effect, rho));
    }
  }

  // Attach the orthogonality certificate when every input is projective:
  // the LO checker can then bound clique sums through the operators
  // (Frobenius norms dominate the spectral norms used in the bound).
  OrthogonalityCertificate cert;
  cert.projective = true;
  for (const auto &party : povms) {
    for (const auto &m : party) {
      if (!is_projective(m)) cert.projective = false;
      for (size_t i = 0; i < m.elements.size() && cert.projective; ++i) {
        const CMat &p = m.elements[i];
        cert.idempotence_defect =
            std::max(cert.idempotence_defect, (p * p - p).norm());
        for (size_t j = 0; j < m.elements.size(); ++j)
          if (i != j)
            cert.orthogonality_defect =
                std::max(cert.orthogonality_defect, (p * m.elements[j]).norm());
      }
    }
  }
  if (cert.projective) b.op_certificate = cert;
  return b;
}

bool is_projective(const Povm &m) {
  m.validate();
  for (size_t i = 0; i < m.elements.size(); ++i) {
    const CMat &p = m.elements[i];
    if (!approx_equal(p * p, p)) return false;
    for (size_t j = i + 1; j < m.elements.size(); ++j)
      if (max_abs(p * m.elements[j]) > kTol) return false;
  }
  return true;
}

CMat sqrt_psd(const CMat &a) {
  if (!approx_hermitian(a)) throw Error("sqrt_psd: not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(a);
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kTol * std::max(1.0, max_abs(a)))
      throw Error("sqrt_psd: negative eigenvalue beyond tolerance");
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

NaimarkDilation naimark_dilate(const Povm &m) {
  m.validate();
  const int d = m.dim();
  const int n = m.outcomes();
  const int D = d * n;

  // Isometry V: |i> -> sum_y (sqrt(P_y)|i>) (x) |y>, laid out system-major.
  CMat v = CMat::Zero(D, d);
  for (int y = 0; y < n; ++y) {
    CMat root = sqrt_psd(m.elements[y]);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) v(j * n + y, i) = root(j, i);
  }

  // Extend the isometry columns to a unitary W with W(|i> (x) |0>) = V|i>.
  // Column of |i> (x) |0> is i*n in the system-major layout.
  CMat w = CMat::Zero(D, D);
  std::vector<int> free_cols;
  for (int i = 0; i < d; ++i) w.col(i * n) = v.col(i);
  for (int c = 0; c < D; ++c)
    if (c % n != 0) free_cols.push_back(c);

  // Modified Gram-Schmidt with re-orthogonalization over candidate basis
  // vectors.
  std::vector<int> filled;
  for (int i = 0; i < d; ++i) filled.push_back(i * n);
  size_t next_free = 0;
  for (int cand = 0; cand < D && next_free < free_cols.size(); ++cand) {
    CVec x = CVec::Zero(D);
    x(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int fc : filled) x -= w.col(fc).dot(x) * w.col(fc);
    if (x.norm() < 1e-6) continue;
    x.normalize();
    int col = free_cols[next_free++];
    w.col(col) = x;
    filled.push_back(col);
  }
  if (next_free != free_cols.size()) throw Error("naimark_dilate: unitary completion failed");
  if (!approx_equal(w.adjoint() * w, CMat::Identity(D, D), 1e-7))
    throw Error("naimark_dilate: completion is not unitary");

  NaimarkDilation dil;
  dil.system_dim = d;
  dil.ancilla_dim = n;
  dil.ancilla_state = CVec::Zero(n);
  dil.ancilla_state(0) = 1.0;
  dil.unitary = w;
  for (int y = 0; y < n; ++y) {
    CMat marker = CMat::Zero(n, n);
    marker(y, y) = 1.0;
    dil.projectors.push_back(w.adjoint() * kron(CMat::Identity(d, d), marker) * w);
  }
  return dil;
}

bool naimark_reproduces(const NaimarkDilation &dil, const Povm &m, double tol) {
  const int d = dil.system_dim;
  CMat anc = dil.ancilla_state * dil.ancilla_state.adjoint();
  for (const auto &rho : tomographic_frame(d)) {
    DensityMatrix joint{kron(rho.m, anc)};
    for (int y = 0; y < m.outcomes(); ++y) {
      double direct = born(m.elements[y], rho);
      double dilated = born(dil.projectors[y], joint);
      if (std::abs(direct - dilated) > tol) return false;
    }
  }
  return true;
}

Instrument luders_binary_test(const CMat &p) {
  if (!approx_equal(p * p, p)) throw Error("luders_binary_test: input is not a projector");
  Instrument t;
  t.dim_in = t.dim_out = static_cast<int>(p.rows());
  t.kraus.push_back({p});
  t.kraus.push_back({CMat::Identity(p.rows(), p.rows()) - p});
  t.deterministic = true;
  t.validate();
  return t;
}

std::vector<DensityMatrix> instrument_apply(const Instrument &t, const DensityMatrix &rho) {
  std::vector<DensityMatrix> out;
  for (const auto &outcome : t.kraus) {
    CMat post = CMat::Zero(t.dim_out, t.dim_out);
    for (const auto &k : outcome) post += k * rho.m * k.adjoint();
    out.push_back(DensityMatrix{post});  // unnormalized: trace = probability
  }
  return out;
}

Povm sequential_discriminator(const std::vector<CMat> &projectors) {
  if (projectors.empty()) throw PreconditionError("sequential_discriminator: empty input");
  const int d = static_cast<int>(projectors.front().rows());
  for (size_t i = 0; i < projectors.size(); ++i) {
    const CMat &p = projectors[i];
    if (p.rows() != d || p.cols() != d)
      throw DimensionMismatch("sequential_discriminator: dimension mismatch");
    if (!approx_equal(p * p, p)) throw Error("sequential_discriminator: non-projector input");
    for (size_t j = 0; j < i; ++j)
      if (max_abs(p * projectors[j]) > kTol)
        throw Error("sequential_discriminator: projectors not pairwise orthogonal");
  }

  // Compose the Lueders pairs in order; outcome m fires test m after the
  // complements of all earlier tests.
  Povm out;
  CMat chain = CMat::Identity(d, d);  // product of complements so far
  for (const auto &p : projectors) {
    CMat s = p * chain;
    out.elements.push_back(s.adjoint() * s);
    chain = (CMat::Identity(d, d) - p) * chain;
  }
  CMat rest = chain.adjoint() * chain;
  if (max_abs(rest) > kTol) out.elements.push_back(rest);
  out.validate();
  return out;
}

PqWeight pq_weight(const HypergraphPtr &h, const std::vector<CMat> &assignment,
                   const DensityMatrix &rho) {
  h->validate();
  rho.validate();
  if (static_cast<int>(assignment.size()) != h->vertex_count())
    throw DimensionMismatch("pq_weight: one projector per vertex required");
  const int d = rho.dim();
  for (const auto &p : assignment) {
    if (p.rows() != d || p.cols() != d) throw DimensionMismatch("pq_weight: projector size");
    if (!approx_equal(p * p, p)) throw Error("pq_weight: assignment contains a non-projector");
  }

  auto extended = std::make_shared<Hypergraph>(*h);
  std::vector<CMat> full_assignment = assignment;
  int added = 0;
  for (size_t x = 0; x < h->edges.size(); ++x) {
    CMat sum = CMat::Zero(d, d);
    const auto &edge = h->edges[x];
    for (size_t i = 0; i < edge.size(); ++i) {
      for (size_t j = i + 1; j < edge.size(); ++j)
        if (max_abs(assignment[edge[i]] * assignment[edge[j]]) > kTol)
          throw Error("pq_weight: projectors of hyperedge " + std::to_string(x) +
                      " are not pairwise orthogonal");
      sum += assignment[edge[i]];
    }
    CMat gap = CMat::Identity(d, d) - sum;
    if (max_abs(gap) <= kTol) continue;
    if (!approx_psd(gap))
      throw Error("pq_weight: hyperedge " + std::to_string(x) + " exceeds the identity");
    // Complete the edge with a fresh rest vertex carrying I - sum.
    int v = extended->vertex_count();
    extended->vertices.push_back("rest[" + std::to_string(x) + "]");
    extended->edges[x].push_back(v);
    full_assignment.push_back(gap);
    ++added;
  }

  Vec w;
  w.reserve(full_assignment.size());
  for (const auto &p : full_assignment) w.push_back(padded_interval(born(p, rho)));

  PqWeight out;
  out.hypergraph = extended;
  out.completion_vertices = added;
  out.weight = make_probability_weight(out.hypergraph, std::move(w));
  return out;
}

bool mutually_exclusive(const std::vector<CMat> &effects) {
  if (effects.empty()) throw PreconditionError("mutually_exclusive: empty input");
  const int d = static_cast<int>(effects.front().rows());
  for (size_t i = 0; i < effects.size(); ++i)
    for (size_t j = i + 1; j < effects.size(); ++j) {
      CMat rest = CMat::Identity(d, d) - effects[i] - effects[j];
      if (!approx_psd(rest)) return false;
    }
  return true;
}

bool is_pure_effect(const CMat &effect) {
  if (!approx_psd(effect)) return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(effect);
  int rank = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (ev > kTol) {
      if (ev > 1.0 + kTol) return false;
      ++rank;
    }
  }
  return rank <= 1;
}

bool identifies_pure_state(const CMat &effect) {
  if (!is_pure_effect(effect)) return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(effect);
  return std::abs(es.eigenvalues().maxCoeff() - 1.0) <= kTol;
}

bool is_extremal_effect(const CMat &effect) {
  if (!approx_psd(effect)) return false;
  return approx_equal(effect * effect, effect);
}

std::vector<DensityMatrix> tomographic_frame(int dim) {
  std::vector<DensityMatrix> frame;
  for (int j = 0; j < dim; ++j) {
    CVec e = CVec::Zero(dim);
    e(j) = 1.0;
    frame.push_back(DensityMatrix::pure(e));
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CVec plus = CVec::Zero(dim), imag = CVec::Zero(dim);
      plus(j) = 1.0;
      plus(k) = 1.0;
      imag(j) = 1.0;
      imag(k) = Cplx(0.0, 1.0);
      frame.push_back(DensityMatrix::pure(plus));
      frame.push_back(DensityMatrix::pure(imag));
    }
  }
  return frame;
}

}  // namespace gptbox::quantum
