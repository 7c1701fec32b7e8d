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

#ifndef GPTBOX_LINPROG_HPP
#define GPTBOX_LINPROG_HPP

#include <optional>
#include <vector>

#include "gptbox/scalar.hpp"

namespace gptbox {

/// A linear program
///
///   maximize   objective . x        (or pure feasibility)
///   subject to eq_lhs  x  = eq_rhs
///              ub_lhs  x <= ub_rhs
///              x_i >= 0 for every i with nonneg[i]
///
/// stored exactly.  Entries may be rational, quadratic-field, or interval
/// scalars; the solve is exact whenever every entry is exact.
struct LinearProgram {
  int num_vars = 0;
  bool maximize = false;  // false: feasibility problem, objective ignored
  Vec objective;
  Mat eq_lhs;
  Vec eq_rhs;
  Mat ub_lhs;
  Vec ub_rhs;
  std::vector<bool> nonneg;  // empty means all variables >= 0

  explicit LinearProgram(int nvars = 0) : num_vars(nvars) {}

  void set_objective(Vec c) {
    maximize = true;
    objective = std::move(c);
  }
  void add_eq(Vec lhs, Scalar rhs) {
    eq_lhs.push_back(std::move(lhs));
    eq_rhs.push_back(std::move(rhs));
  }
  void add_ub(Vec lhs, Scalar rhs) {  // lhs . x <= rhs
    ub_lhs.push_back(std::move(lhs));
    ub_rhs.push_back(std::move(rhs));
  }
  void add_lb(const Vec &lhs, const Scalar &rhs) {  // lhs . x >= rhs
    Vec neg(lhs.size());
    for (size_t i = 0; i < lhs.size(); ++i) neg[i] = -lhs[i];
    add_ub(std::move(neg), -rhs);
  }
  bool var_nonneg(int i) const { return nonneg.empty() ? true : nonneg[i]; }
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar optimum;           // meaningful when Optimal
  Vec witness;              // feasible (optimal) point when Optimal
  Vec farkas_eq;            // infeasibility certificate: multipliers on eq rows
  Vec farkas_ub;            // multipliers on ub rows, >= 0
  Cert certainty = Cert::Exact;
};

/// Exact primal simplex (two phases, Bland's anti-cycling rule).  With any
/// interval entry, pivoting decisions fall back to midpoints and the final
/// verdict is re-certified against the enclosures; an uncertifiable outcome
/// throws Indeterminate.
LpResult lp_solve(const LinearProgram &lp);

/// Feasibility of the constraint set; same certificates as lp_solve with a
/// zero objective.  result.status is Optimal (with a witness) or Infeasible.
LpResult lp_feasible(const LinearProgram &lp);

/// Re-substitutes the witness into every constraint.  Exact check for exact
/// data; certified-within-precision for intervals.
bool verify_witness(const LinearProgram &lp, const LpResult &res);

/// Checks the Farkas certificate: the multiplier combination of the
/// constraints must bound a nonnegative quantity by a negative one.
bool verify_farkas(const LinearProgram &lp, const LpResult &res);

}  // namespace gptbox

#endif  // GPTBOX_LINPROG_HPP
