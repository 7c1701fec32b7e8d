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

#include "gptbox/behavior.hpp"

#include <algorithm>

namespace gptbox {

namespace {

long flat_index(const std::vector<int> &digits, const std::vector<int> &radix) {
  long idx = 0;
  for (size_t i = 0; i < radix.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= radix[i]) throw Error("index out of alphabet range");
    idx = idx * radix[i] + digits[i];
  }
  return idx;
}

std::vector<int> unflatten(long idx, const std::vector<int> &radix) {
  std::vector<int> digits(radix.size());
  for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % radix[i]);
    idx /= radix[i];
  }
  return digits;
}

long count(const std::vector<int> &radix) {
  long c = 1;
  for (int r : radix) c *= r;
  return c;
}

// Equality of a difference under the interval slack convention: exact
// scalars must agree exactly; enclosures must sit within [-slack, slack].
int diff_sign_with_slack(const Scalar &diff, const Rational &slack, Cert &cert) {
  if (diff.is_exact()) return diff.sign();
  cert = Cert::Within;
  Rational lo = diff.inf(), hi = diff.sup();
  if (lo > slack) return 1;
  if (hi < -slack) return -1;
  if (-slack <= lo && hi <= slack) return 0;
  throw Indeterminate("difference enclosure [" + lo.str() + ", " + hi.str() +
                      "] straddles the slack band");
}

}  // namespace

Rational default_slack() { return Rational(1, 1000000000); }

long Scenario::input_count() const { return count(inputs); }
long Scenario::output_count() const { return count(outputs); }
long Scenario::flat_input(const std::vector<int> &x) const { return flat_index(x, inputs); }
long Scenario::flat_output(const std::vector<int> &y) const { return flat_index(y, outputs); }
std::vector<int> Scenario::unflatten_input(long idx) const { return unflatten(idx, inputs); }
std::vector<int> Scenario::unflatten_output(long idx) const { return unflatten(idx, outputs); }

void Behavior::validate() const {
  if (sc.parties() == 0 || sc.inputs.size() != sc.outputs.size())
    throw DimensionMismatch("behavior: malformed scenario");
  if (static_cast<long>(table.size()) != sc.input_count() * sc.output_count())
    throw DimensionMismatch("behavior: table size does not match the scenario");
  Cert cert = Cert::Exact;
  for (long x = 0; x < sc.input_count(); ++x) {
    Scalar total(0);
    for (long y = 0; y < sc.output_count(); ++y) {
      if (diff_sign_with_slack(p(x, y), default_slack(), cert) < 0)
        throw Error("behavior: negative probability at x=" + std::to_string(x));
      total += p(x, y);
    }
    if (diff_sign_with_slack(total - Scalar(1), default_slack(), cert) != 0)
      throw Error("behavior: outputs for input " + std::to_string(x) +
                  " sum to " + total.str());
  }
}

std::string Event::str() const {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  s += "|";
  for (size_t i = 0; i < y.size(); ++i) s += (i ? "," : "") + std::to_string(y[i]);
  return s;
}

void NonlocalGame::validate() const {
  if (static_cast<long>(input_dist.size()) != sc.input_count())
    throw DimensionMismatch("game: input distribution size");
  if (static_cast<long>(payoff_table.size()) != sc.input_count() * sc.output_count())
    throw DimensionMismatch("game: payoff table size");
  Cert cert = Cert::Exact;
  Scalar total(0);
  for (const auto &q : input_dist) {
    if (cmp3(q, Scalar(0), cert) < 0) throw Error("game: negative input probability");
    total += q;
  }
  if (cmp3(total, Scalar(1), cert) != 0) throw Error("game: input distribution not normalized");
}

Behavior behavior_from_model(const State &joint,
                             const std::vector<std::vector<Measurement>> &meas) {
  const int N = static_cast<int>(meas.size());
  if (N == 0) throw PreconditionError("behavior_from_model: no parties");
  if (!is_deterministic(joint))
    throw PreconditionError("behavior_from_model: joint state must be deterministic");

  Behavior b;
  long joint_dim = 1;
  for (int i = 0; i < N; ++i) {
    if (meas[i].empty()) throw PreconditionError("behavior_from_model: party without inputs");
    const auto &sys_i = meas[i].front().sys;
    int n_out = static_cast<int>(meas[i].front().effects.size());
    for (const auto &m : meas[i]) {
      if (!same_system(m.sys, sys_i))
        throw SystemMismatch("behavior_from_model: one party, different systems");
      if (static_cast<int>(m.effects.size()) != n_out)
        throw DimensionMismatch("behavior_from_model: output alphabet varies with the input");
    }
    b.sc.inputs.push_back(static_cast<int>(meas[i].size()));
    b.sc.outputs.push_back(n_out);
    joint_dim *= sys_i->dim;
  }
  if (joint_dim != joint.sys->dim)
    throw DimensionMismatch("behavior_from_model: state dimension is not the product of parties");

  b.table.assign(b.sc.input_count() * b.sc.output_count(), Scalar(0));
  for (long xf = 0; xf < b.sc.input_count(); ++xf) {
    auto x = b.sc.unflatten_input(xf);
    for (long yf = 0; yf < b.sc.output_count(); ++yf) {
      auto y = b.sc.unflatten_output(yf);
      Vec effect = meas[0][x[0]].effects[y[0]].coords;
      for (int i = 1; i < N; ++i) effect = kron(effect, meas[i][x[i]].effects[y[i]].coords);
      b.p(xf, yf) = dot(effect, joint.coords);
    }
  }
  b.validate();
  return b;
}

Scalar payoff(const NonlocalGame &g, const Behavior &b) {
  g.validate();
  b.validate();
  if (!(g.sc == b.sc)) throw DimensionMismatch("payoff: game and behavior alphabets differ");
  Scalar total(0);
  for (long x = 0; x < g.sc.input_count(); ++x) {
    Scalar inner(0);
    for (long y = 0; y < g.sc.output_count(); ++y)
      inner += g.payoff_table[x * g.sc.output_count() + y] * b.p(x, y);
    total += g.input_dist[x] * inner;
  }
  return total;
}

Verdict is_no_signalling(const Behavior &b, const Rational &slack) {
  b.validate();
  const int N = b.sc.parties();
  Verdict v;
  v.certainty = vec_is_exact(b.table) ? Cert::Exact : Cert::Within;
  Cert cert = v.certainty;

  // For every nonempty proper subset S (the marginalized group), the sum
  // over y_S must not depend on x_S.  Doing this for all S covers both
  // directions of every bipartition.
  for (int mask = 1; mask < (1 << N) - 1; ++mask) {
    std::vector<int> in_s, out_s;
    for (int i = 0; i < N; ++i) (mask >> i & 1 ? in_s : out_s).push_back(i);

    // Enumerate the fixed part: x and y of the complement group.
    std::vector<int> comp_in_sizes, comp_out_sizes, s_in_sizes, s_out_sizes;
    for (int i : out_s) comp_in_sizes.push_back(b.sc.inputs[i]);
    for (int i : out_s) comp_out_sizes.push_back(b.sc.outputs[i]);
    for (int i : in_s) s_in_sizes.push_back(b.sc.inputs[i]);
    for (int i : in_s) s_out_sizes.push_back(b.sc.outputs[i]);

    for (long cif = 0; cif < count(comp_in_sizes); ++cif) {
      auto ci = unflatten(cif, comp_in_sizes);
      for (long cof = 0; cof < count(comp_out_sizes); ++cof) {
        auto co = unflatten(cof, comp_out_sizes);
        std::optional<Scalar> reference;
        for (long sif = 0; sif < count(s_in_sizes); ++sif) {
          auto si = unflatten(sif, s_in_sizes);
          std::vector<int> x(N), y(N);
          for (size_t j = 0; j < out_s.size(); ++j) x[out_s[j]] = ci[j];
          for (size_t j = 0; j < in_s.size(); ++j) x[in_s[j]] = si[j];
          Scalar marg(0);
          for (long sof = 0; sof < count(s_out_sizes); ++sof) {
            auto so = unflatten(sof, s_out_sizes);
            for (size_t j = 0; j < out_s.size(); ++j) y[out_s[j]] = co[j];
            for (size_t j = 0; j < in_s.size(); ++j) y[in_s[j]] = so[j];
            marg += b.p(b.sc.flat_input(x), b.sc.flat_output(y));
          }
          if (!reference) {
            reference = marg;
          } else if (diff_sign_with_slack(marg - *reference, slack, cert) != 0) {
            v.holds = false;
            v.certainty = cert;
            std::string group;
            for (int i : in_s) group += (group.empty() ? "" : ",") + std::to_string(i);
            v.note = "signalling from parties {" + group + "}: marginal changes between inputs";
            return v;
          }
        }
      }
    }
  }
  v.holds = true;
  v.certainty = cert;
  return v;
}

bool locally_orthogonal(const Event &e, const Event &f) {
  if (e.x.size() != f.x.size() || e.y.size() != f.y.size())
    throw DimensionMismatch("locally_orthogonal: different scenarios");
  for (size_t i = 0; i < e.x.size(); ++i)
    if (e.x[i] == f.x[i] && e.y[i] != f.y[i]) return true;
  return false;
}

namespace {

std::vector<std::pair<Event, Scalar>> lo_events(const Behavior &b, bool keep_zero) {
  std::vector<std::pair<Event, Scalar>> events;
  for (long xf = 0; xf < b.sc.input_count(); ++xf) {
    for (long yf = 0; yf < b.sc.output_count(); ++yf) {
      const Scalar &w = b.p(xf, yf);
      if (!keep_zero && w.sign_lenient() <= 0) continue;
      events.push_back({Event{b.sc.unflatten_input(xf), b.sc.unflatten_output(yf)}, w});
    }
  }
  return events;
}

}  // namespace

WeightedGraph lo_graph(const Behavior &b, bool keep_zero_events) {
  b.validate();
  auto events = lo_events(b, keep_zero_events);
  WeightedGraph g;
  const int n = static_cast<int>(events.size());
  g.adj.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    g.labels.push_back(events[i].first.str());
    g.weights.push_back(events[i].second);
    for (int j = 0; j < n; ++j)
      if (i != j) g.adj[i][j] = locally_orthogonal(events[i].first, events[j].first);
  }
  return g;
}

namespace {

// The operator-certified route for float-derived projective behaviors: any
// locally orthogonal set of k-copy events corresponds to pairwise
// orthogonal product projectors, so its probability sum cannot exceed
// 1 + n*d_i + n^2*d_o.  The full output set of the heaviest input is a
// genuine locally orthogonal set of weight ~1, which pins the value from
// below.
LoReport check_lo_certified(const Behavior &b, int k, long max_vertices,
                            const Rational &slack,
                            const OrthogonalityCertificate &cert) {
  WeightedGraph base = lo_graph(b, false);
  double n = 1;
  for (int i = 0; i < k; ++i) {
    n *= std::max(1, base.size());
    if (n > static_cast<double>(max_vertices))
      throw ResourceCapExceeded("check_lo: graph power exceeds the vertex cap");
  }
  // Lift the factor defects to 2k-fold products (first order, doubled for
  // safety margin) and bound the spectral excess.
  const int factors = 2 * k * b.sc.parties();
  double d_idem = 2.0 * factors * cert.idempotence_defect + 1e-15;
  double d_orth = 2.0 * cert.orthogonality_defect + 1e-15;
  double excess = n * d_idem + n * n * d_orth;
  Rational hi = Rational(1) + Rational::from_double(excess);
  if (hi > Rational(1) + slack)
    throw Indeterminate("check_lo: operator certificate too weak for the slack");

  // Lower bound: the best single-input full-output block, lifted to k copies.
  LoReport rep;
  rep.level = k;
  rep.certainty = Cert::Within;
  rep.note = "operator-certified: orthogonal projective products";
  Rational best_lo(0);
  long best_x = 0;
  for (long x = 0; x < b.sc.input_count(); ++x) {
    Scalar total(0);
    for (long y = 0; y < b.sc.output_count(); ++y) total += b.p(x, y);
    if (total.inf() > best_lo) {
      best_lo = total.inf();
      best_x = x;
    }
  }
  Rational lo_k(1);
  for (int i = 0; i < k; ++i) lo_k = lo_k * best_lo;  // product block is a clique
  rep.max_clique_value = Scalar::interval(min(lo_k, hi), hi);
  rep.satisfied = true;  // hi <= 1 + slack established above
  auto xs = b.sc.unflatten_input(best_x);
  for (long y = 0; y < b.sc.output_count(); ++y) {
    if (b.p(best_x, y).sign_lenient() <= 0) continue;
    Event e;
    for (int c = 0; c < k; ++c) {
      auto ys = b.sc.unflatten_output(y);
      e.x.insert(e.x.end(), xs.begin(), xs.end());
      e.y.insert(e.y.end(), ys.begin(), ys.end());
    }
    rep.witness.push_back(std::move(e));
  }
  return rep;
}

}  // namespace

LoReport check_lo(const Behavior &b, int k, long max_vertices, const Rational &slack,
                  bool exact_value) {
  if (k < 1) throw PreconditionError("check_lo: level must be >= 1");
  if (!vec_is_exact(b.table) && b.op_certificate && b.op_certificate->projective)
    return check_lo_certified(b, k, max_vertices, slack, *b.op_certificate);
  auto events = lo_events(b, false);
  WeightedGraph base = lo_graph(b, false);
  WeightedGraph g = disjunctive_power(base, k, max_vertices);
  std::optional<Scalar> stop;
  if (!exact_value) stop = Scalar(1);
  // Interval tables carry plateaus of near-ties; prune them within half the
  // verdict slack (the reported enclosure absorbs the gap).
  Rational gap = vec_is_exact(g.weights) ? Rational(0) : slack / Rational(2);
  CliqueResult clique = max_weight_clique(g, stop, gap);

  LoReport rep;
  rep.level = k;
  rep.max_clique_value = clique.value;
  rep.certainty = clique.certainty;
  rep.value_is_lower_bound = clique.early_stopped;

  // Decode the witness: each power vertex is a base-event tuple, digits in
  // base |events| with the first copy most significant.
  long nbase = static_cast<long>(events.size());
  for (int v : clique.clique) {
    long idx = v;
    std::vector<long> digits(k);
    for (int c = k - 1; c >= 0; --c) {
      digits[c] = idx % nbase;
      idx /= nbase;
    }
    Event combined;
    for (long d : digits) {
      const Event &e = events[d].first;
      combined.x.insert(combined.x.end(), e.x.begin(), e.x.end());
      combined.y.insert(combined.y.end(), e.y.begin(), e.y.end());
    }
    rep.witness.push_back(std::move(combined));
  }

  const Scalar &val = clique.value;
  if (val.is_exact()) {
    Cert cert = rep.certainty;
    rep.satisfied = cmp3(val, Scalar(1), cert) <= 0;
  } else {
    Rational lo = val.inf(), hi = val.sup();
    if (hi <= Rational(1)) {
      rep.satisfied = true;
    } else if (lo > Rational(1)) {
      rep.satisfied = false;
    } else if (hi <= Rational(1) + slack) {
      rep.satisfied = true;  // equality within the working precision
    } else {
      throw Indeterminate("LO clique value enclosure [" + lo.str() + ", " + hi.str() +
                          "] straddles 1 beyond the slack");
    }
  }
  return rep;
}

Behavior coarse_grain_behavior(const Behavior &b,
                               const std::vector<std::vector<std::vector<int>>> &partitions) {
  b.validate();
  const int N = b.sc.parties();
  if (static_cast<int>(partitions.size()) != N)
    throw DimensionMismatch("coarse_grain_behavior: one partition per party required");
  for (int i = 0; i < N; ++i) {
    std::vector<int> seen(b.sc.outputs[i], 0);
    for (const auto &block : partitions[i]) {
      if (block.empty()) throw Error("coarse_grain_behavior: empty block");
      for (int o : block) {
        if (o < 0 || o >= b.sc.outputs[i]) throw Error("coarse_grain_behavior: label out of range");
        if (seen[o]++) throw Error("coarse_grain_behavior: label in two blocks");
      }
    }
    for (int o = 0; o < b.sc.outputs[i]; ++o)
      if (!seen[o]) throw Error("coarse_grain_behavior: label not covered");
  }

  Behavior out;
  out.sc.inputs = b.sc.inputs;
  for (int i = 0; i < N; ++i) out.sc.outputs.push_back(static_cast<int>(partitions[i].size()));
  out.table.assign(out.sc.input_count() * out.sc.output_count(), Scalar(0));
  for (long xf = 0; xf < b.sc.input_count(); ++xf) {
    for (long yf = 0; yf < b.sc.output_count(); ++yf) {
      auto y = b.sc.unflatten_output(yf);
      std::vector<int> merged(N);
      for (int i = 0; i < N; ++i) {
        for (size_t blk = 0; blk < partitions[i].size(); ++blk) {
          const auto &block = partitions[i][blk];
          if (std::find(block.begin(), block.end(), y[i]) != block.end()) {
            merged[i] = static_cast<int>(blk);
            break;
          }
        }
      }
      out.p(xf, out.sc.flat_output(merged)) += b.p(xf, yf);
    }
  }
  out.validate();
  return out;
}

}  // namespace gptbox
