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

#include "gptbox/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gptbox {

void WeightedGraph::validate() const {
  const int n = size();
  if (static_cast<int>(labels.size()) != n && !labels.empty())
    throw DimensionMismatch("graph: labels/weights size mismatch");
  if (static_cast<int>(adj.size()) != n) throw DimensionMismatch("graph: adjacency size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) != n) throw DimensionMismatch("graph: adjacency row size");
    if (adj[i][i]) throw Error("graph: self-loop at vertex " + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (adj[i][j] != adj[j][i]) throw Error("graph: adjacency not symmetric");
    if (weights[i].sign_lenient() < 0) throw Error("graph: negative weight");
  }
}

namespace {

// Branch-and-bound over bitset candidate sets, in the style of the exact
// MCS solvers: vertices renumbered by non-increasing weight, candidates
// greedily colored, branches taken highest color first and abandoned once
// the color-prefix bound cannot beat the incumbent.  All pruning works on
// the sup side of the weights, so the incumbent lower bound and the
// enclosure upper bound are both certified.
//
// W is the weight arithmetic: plain Rational, or long long numerators over
// a common denominator when every weight fits (the fast path).
template <typename W>
struct SearchCore {
  int n = 0;
  int words = 0;
  std::vector<std::vector<uint64_t>> adj;
  std::vector<W> wlo, wsup;
  std::vector<int> order;  // search index -> original vertex

  W best_lo{0};
  W best_hi{0};
  W gap{0};
  std::vector<int> best_clique;
  std::vector<int> current;
  std::optional<W> stop_sup;
  bool stopped = false;

  void note_clique(const W &acc_lo, const W &acc_sup) {
    if (acc_sup > best_hi) best_hi = acc_sup;
    if (acc_lo > best_lo) {
      best_lo = acc_lo;
      best_clique = current;
      if (stop_sup && best_lo > *stop_sup) stopped = true;
    }
  }

  void expand(const std::vector<uint64_t> &cand, const W &acc_lo, const W &acc_sup) {
    if (stopped) return;
    note_clique(acc_lo, acc_sup);
    std::vector<int> vertices;
    for (int wd = 0; wd < words; ++wd) {
      uint64_t bits = cand[wd];
      while (bits) {
        vertices.push_back(wd * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
      }
    }
    if (vertices.empty()) return;

    // Greedy coloring in weight order; a clique takes at most one vertex
    // per class, so prefix sums of per-class maxima bound any completion.
    std::vector<int> color(vertices.size(), 0);
    std::vector<std::vector<uint64_t>> members;
    std::vector<W> class_max;
    for (size_t i = 0; i < vertices.size(); ++i) {
      int v = vertices[i];
      bool placed = false;
      for (size_t c = 0; c < members.size(); ++c) {
        bool conflict = false;
        for (int k = 0; k < words && !conflict; ++k) conflict = (members[c][k] & adj[v][k]) != 0;
        if (!conflict) {
          members[c][v / 64] |= uint64_t(1) << (v % 64);
          color[i] = static_cast<int>(c);
          placed = true;
          break;
        }
      }
      if (!placed) {
        members.emplace_back(words, 0);
        members.back()[v / 64] |= uint64_t(1) << (v % 64);
        color[i] = static_cast<int>(members.size()) - 1;
        class_max.push_back(wsup[v]);  // first member is the heaviest
      }
    }
    std::vector<W> prefix(class_max.size());
    for (size_t c = 0; c < class_max.size(); ++c)
      prefix[c] = c == 0 ? class_max[0] : W(prefix[c - 1] + class_max[c]);

    // Branch by descending color with the prefix bound as the cutoff.
    std::vector<size_t> by_color(vertices.size());
    std::iota(by_color.begin(), by_color.end(), size_t{0});
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](size_t a, size_t b) { return color[a] < color[b]; });

    std::vector<uint64_t> remaining = cand;
    std::vector<uint64_t> next(words);
    for (size_t pos = by_color.size(); pos-- > 0;) {
      if (stopped) return;
      size_t i = by_color[pos];
      int v = vertices[i];
      // Cliques inside `remaining` use one vertex per class of color <= this.
      if (acc_sup + prefix[color[i]] <= best_lo + gap) return;
      for (int k = 0; k < words; ++k) next[k] = remaining[k] & adj[v][k];
      remaining[v / 64] &= ~(uint64_t(1) << (v % 64));
      current.push_back(order[v]);
      expand(next, acc_lo + wlo[v], acc_sup + wsup[v]);
      current.pop_back();
    }
  }

  void run() {
    std::vector<uint64_t> all(words, 0);
    for (int i = 0; i < n; ++i) all[i / 64] |= uint64_t(1) << (i % 64);
    expand(all, W{0}, W{0});
  }
};

template <typename W>
void load_graph(SearchCore<W> &s, const WeightedGraph &g, std::vector<int> live) {
  s.order = std::move(live);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    Rational mx = g.weights[x].midpoint(), my = g.weights[y].midpoint();
    if (mx != my) return mx > my;
    return x < y;
  });
  s.n = static_cast<int>(s.order.size());
  s.words = (s.n + 63) / 64;
  s.adj.assign(s.n, std::vector<uint64_t>(s.words, 0));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (g.adj[s.order[i]][s.order[j]]) s.adj[i][j / 64] |= uint64_t(1) << (j % 64);
}

// Common denominator of exact rational weights when it stays small enough
// for overflow-free long long sums; 0 when ineligible.
long long common_denominator(const WeightedGraph &g, const std::vector<int> &live) {
  mpz_class lcm_den = 1;
  for (int v : live) {
    if (!g.weights[v].is_rational()) return 0;
    mpz_class den = g.weights[v].rational_value().den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    if (!lcm_den.fits_slong_p()) return 0;
  }
  mpz_class total = 0;
  for (int v : live) {
    Rational w = g.weights[v].rational_value();
    total += w.num() * (lcm_den / w.den());
  }
  mpz_class limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), 62);
  if (total >= limit) return 0;
  return lcm_den.get_si();
}

}  // namespace

CliqueResult max_weight_clique(const WeightedGraph &g, const std::optional<Scalar> &early_stop,
                               const Rational &prune_gap) {
  g.validate();
  CliqueResult out;
  std::vector<int> live;
  for (int i = 0; i < g.size(); ++i) {
    if (g.weights[i].sign_lenient() == 0)
      ++out.zero_pruned;
    else
      live.push_back(i);
  }

  bool inexact = false;
  for (int v : live) inexact = inexact || !g.weights[v].is_exact();

  long long denom = (inexact || prune_gap.sign() > 0) ? 0 : common_denominator(g, live);
  if (denom > 0) {
    SearchCore<long long> s;
    load_graph(s, g, live);
    s.wlo.resize(s.n);
    s.wsup.resize(s.n);
    for (int i = 0; i < s.n; ++i) {
      Rational w = g.weights[s.order[i]].rational_value();
      mpz_class dd(std::to_string(denom));
      mpz_class num = w.num() * (dd / w.den());
      s.wlo[i] = s.wsup[i] = num.get_si();
    }
    if (early_stop) {
      // Stop once best > threshold: compare numerators against floor(t * D).
      Rational scaled = early_stop->sup() * Rational(denom);
      mpz_class fl;
      mpz_class num = scaled.num(), den = scaled.den();
      mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      s.stop_sup =
          fl.fits_slong_p() ? fl.get_si() : std::numeric_limits<long long>::max();
    }
    s.run();
    out.clique = s.best_clique;
    std::sort(out.clique.begin(), out.clique.end());
    out.early_stopped = s.stopped;
    Scalar v(0);
    for (int i : out.clique) v += g.weights[i];
    out.value = v;
    out.certainty = Cert::Exact;
    return out;
  }

  SearchCore<Rational> s;
  load_graph(s, g, live);
  s.wlo.resize(s.n);
  s.wsup.resize(s.n);
  for (int i = 0; i < s.n; ++i) {
    s.wlo[i] = g.weights[s.order[i]].inf();
    s.wsup[i] = g.weights[s.order[i]].sup();
  }
  s.gap = prune_gap;
  if (early_stop) s.stop_sup = early_stop->sup();
  s.run();

  out.clique = s.best_clique;
  std::sort(out.clique.begin(), out.clique.end());
  out.early_stopped = s.stopped;
  if (inexact || prune_gap.sign() > 0) {
    Rational hi = max(s.best_hi, s.best_lo + prune_gap);
    out.value = Scalar::interval(s.best_lo, hi);
    out.certainty = Cert::Within;
  } else {
    Scalar v(0);
    for (int i : out.clique) v += g.weights[i];
    out.value = v;
    out.certainty = Cert::Exact;
  }
  return out;
}

WeightedGraph disjunctive_product(const WeightedGraph &a, const WeightedGraph &b) {
  a.validate();
  b.validate();
  WeightedGraph p;
  const int na = a.size(), nb = b.size();
  p.weights.reserve(static_cast<size_t>(na) * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      p.weights.push_back(a.weights[i] * b.weights[j]);
      std::string la = a.labels.empty() ? std::to_string(i) : a.labels[i];
      std::string lb = b.labels.empty() ? std::to_string(j) : b.labels[j];
      p.labels.push_back(la + ";" + lb);
    }
  }
  const int n = na * nb;
  p.adj.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int ip = 0; ip < na; ++ip)
        for (int jp = 0; jp < nb; ++jp) {
          if (i == ip && j == jp) continue;
          bool edge = (i != ip && a.adj[i][ip]) || (j != jp && b.adj[j][jp]);
          p.adj[i * nb + j][ip * nb + jp] = edge;
        }
  return p;
}

WeightedGraph disjunctive_power(const WeightedGraph &g, int k, long max_vertices) {
  if (k < 1) throw Error("disjunctive_power: level must be >= 1");
  double projected = 1;
  for (int i = 0; i < k; ++i) {
    projected *= std::max(1, g.size());
    if (projected > static_cast<double>(max_vertices))
      throw ResourceCapExceeded("graph power " + std::to_string(g.size()) + "^" +
                                std::to_string(k) + " exceeds the vertex cap " +
                                std::to_string(max_vertices));
  }
  WeightedGraph acc = g;
  for (int i = 1; i < k; ++i) acc = disjunctive_product(acc, g);
  return acc;
}

}  // namespace gptbox
