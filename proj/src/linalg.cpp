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

#include "gptbox/linalg.hpp"

#include <cstdlib>

namespace gptbox {

namespace {

// Pivot choice: first row with a leniently nonzero entry; among interval
// entries prefer the one with the largest midpoint magnitude.
int pick_pivot(const Mat &m, int col, int from_row) {
  int best = -1;
  Rational best_mag(0);
  for (int r = from_row; r < static_cast<int>(m.size()); ++r) {
    if (m[r][col].sign_lenient() == 0) continue;
    Rational mag = m[r][col].midpoint().abs();
    if (best < 0 || mag > best_mag) {
      best = r;
      best_mag = mag;
    }
    if (m[r][col].is_exact()) return r;  // exact nonzero pivot is always safe
  }
  return best;
}

}  // namespace

std::optional<Vec> gauss_solve(Mat m, Vec b) {
  const int n = static_cast<int>(m.size());
  for (const auto &row : m)
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch("gauss_solve: non-square matrix");
  if (static_cast<int>(b.size()) != n) throw DimensionMismatch("gauss_solve: rhs size");

  for (int col = 0; col < n; ++col) {
    int piv = pick_pivot(m, col, col);
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    Scalar p = m[col][col];
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      if (m[r][col].sign_lenient() == 0 && m[r][col].is_exact()) continue;
      Scalar f = m[r][col] / p;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

int rank(Mat m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = pick_pivot(m, col, rk);
    if (piv < 0) continue;
    std::swap(m[piv], m[rk]);
    Scalar p = m[rk][col];
    for (int r = rk + 1; r < rows; ++r) {
      if (m[r][col].sign_lenient() == 0 && m[r][col].is_exact()) continue;
      Scalar f = m[r][col] / p;
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

Vec kron(const Vec &x, const Vec &y) {
  Vec out;
  out.reserve(x.size() * y.size());
  for (const auto &xi : x)
    for (const auto &yj : y) out.push_back(xi * yj);
  return out;
}

bool same_ray(const Vec &v, const Vec &w) {
  if (v.size() != w.size()) return false;
  if (is_zero_vec(v) || is_zero_vec(w)) return false;
  // Find a coordinate where w is nonzero, derive lambda, check the rest.
  int idx = -1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].sign_lenient() != 0) {
      idx = static_cast<int>(i);
      break;
    }
  }
  if (idx < 0) return false;
  if (v[idx].sign_lenient() == 0) return false;
  Scalar lambda = v[idx] / w[idx];
  if (lambda.sign_lenient() <= 0) return false;
  for (size_t i = 0; i < v.size(); ++i) {
    if ((v[i] - lambda * w[i]).sign_lenient() != 0) return false;
  }
  return true;
}

bool is_zero_vec(const Vec &v) {
  for (const auto &s : v)
    if (s.sign_lenient() != 0) return false;
  return true;
}

}  // namespace gptbox
