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

#ifndef NONLOC_LINALG_HPP
#define NONLOC_LINALG_HPP

#include <optional>
#include <vector>

#include "nonloc/rational.hpp"

namespace nonloc {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Rank over Q by Gaussian elimination (takes a copy).
size_t rat_rank(RatMatrix rows);

/// Basis of the null space {y : A y = 0}; vectors are columns as RatVectors.
RatMatrix rat_null_space(const RatMatrix &a);

/// One exact solution of A y = b, or nullopt when inconsistent.
std::optional<RatVector> rat_solve(RatMatrix a, RatVector b);

}  // namespace nonloc

#endif
