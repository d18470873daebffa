// Copyright 2026 The nonloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONLOC_BOXES_HPP
#define NONLOC_BOXES_HPP

#include "nonloc/behavior.hpp"
#include "nonloc/dense.hpp"

namespace nonloc {

/// PR box: P(ab|xy) = 1/2 when a xor b = x.y, else 0.
RatBehavior pr_box();

/// Singlet statistics at the CHSH-optimal planar angles (value 2*sqrt(2)).
FltBehavior tsirelson_box();

/// CHSH measurement family: A at angles {0, pi/2}, B at {pi/4, -pi/4}.
MeasurementFamily chsh_measurements();

/// Exact GHZ_3 box for X/Y settings per party (Mermin correlations).
RatBehavior ghz_mermin_box();

/// Tripartite no-signaling box with a xor b xor c = xy xor xz xor yz.
RatBehavior svetlichny_box();

/// PR box between parties 1 and 2 with party 0 uniform and independent.
RatBehavior pr23_uniform_box();

/// Deterministic signaling fixture: party 1's outcome follows party 0's
/// setting (violates no-signaling at party 0).
RatBehavior signaling_box();

}  // namespace nonloc

#endif
