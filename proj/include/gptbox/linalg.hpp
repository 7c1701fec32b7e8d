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

#ifndef GPTBOX_LINALG_HPP
#define GPTBOX_LINALG_HPP

#include <optional>

#include "gptbox/scalar.hpp"

namespace gptbox {

/// Solves the square system M x = b by Gaussian elimination.
/// Returns nullopt when M is singular (or cannot be certified regular for
/// interval entries).
std::optional<Vec> gauss_solve(Mat m, Vec b);

/// Row rank of the matrix.  Pivots are chosen by lenient sign, so for
/// interval entries the result is the rank of the midpoint matrix.
int rank(Mat m);

/// Kronecker product of two coordinate vectors.
Vec kron(const Vec &x, const Vec &y);

/// True when v == lambda * w for some lambda > 0 (the two vectors span the
/// same ray).  Exact for field entries, lenient for intervals.
bool same_ray(const Vec &v, const Vec &w);

bool is_zero_vec(const Vec &v);

}  // namespace gptbox

#endif  // GPTBOX_LINALG_HPP
