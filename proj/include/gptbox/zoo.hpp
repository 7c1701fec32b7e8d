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

#ifndef GPTBOX_ZOO_HPP
#define GPTBOX_ZOO_HPP

#include "gptbox/behavior.hpp"
#include "gptbox/deciders.hpp"
#include "gptbox/gpt.hpp"

namespace gptbox::zoo {

/// n-outcome classical system: simplex states, basis-covector effects.
SystemPtr classical_system(int n);

/// The square bit: four pure states on a square, four pure effects, two
/// pure measurements {a1,a3} and {a2,a4}.  Coordinates carry r^2 = sqrt(2)
/// in Q(sqrt 2) (states pre-scaled by r, effects by 1/r), which leaves
/// every pairing of the model exact.
SystemPtr square_bit();

/// Regular polygon system with n vertices under the no-restriction reading.
/// Coordinates are taken in the frame of three basis states, so every entry
/// is a polynomial in cos(2*pi/n): exact over Q or a quadratic field for
/// n in {3,4,5,6,8,10,12}, certified intervals of the given precision
/// otherwise.
SystemPtr polygon_system(int n, unsigned prec_bits = Scalar::kEnclosureBits);

/// The index pair {a_y, a_{y + (n+1)/2}} (odd n) or {a_j, a_{j + n/2 + 1}}
/// (even n) that the polygon analysis shows cannot coexist for n > 3.
std::pair<int, int> polygon_critical_pair(int n, int base_index = 0);

/// p(y1,y2|x1,x2) = 1/2 when y1 xor y2 = x1 and x2, else 0.
Behavior pr_box();

/// Uniform inputs, payoff 1 exactly on winning CHSH outputs.
NonlocalGame chsh_game();

/// The Born-rule behavior of the maximally entangled two-qubit state at
/// the standard Tsirelson-optimal angles (A: 0, pi/4; B: pi/8, -pi/8).
Behavior tsirelson_behavior();

/// Both routes to the odd-polygon coexistence violation: the trigonometric
/// inequality 2 cos(3pi/2n) cos(pi/2n) > 2 cos(3pi/2n)^2 and the pairing
/// sum s = (a_y|phi_{y-1}) + (a_{y+(n+1)/2}|phi_{y-1}) > 1.  The two
/// verdicts are required to agree; holds reports s > 1.
Verdict appendix_d_inequality(int n);

}  // namespace gptbox::zoo

#endif  // GPTBOX_ZOO_HPP
