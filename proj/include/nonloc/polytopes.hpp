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

#ifndef NONLOC_POLYTOPES_HPP
#define NONLOC_POLYTOPES_HPP

#include <string>
#include <vector>

#include "nonloc/behavior.hpp"
#include "nonloc/linalg.hpp"
#include "nonloc/scenario.hpp"

namespace nonloc {

/// A local deterministic strategy: per party, a setting -> outcome map.
struct DeterministicStrategy {
    std::vector<std::vector<int>> assignment;
    RatBehavior to_behavior(const Scenario &s) const;
};

/// Extreme points of a correlation polytope, exact rational, duplicate-free.
struct VertexSet {
    Scenario scenario;
    std::string method;
    std::vector<RatBehavior> vertices;
    size_t size() const { return vertices.size(); }
};

struct PolytopeCaps {
    size_t deterministic_cap = 1'000'000;  // max deterministic vertex count
    size_t ns_table_dim_cap = 64;          // NS enumeration: max table dimension
    size_t ns_affine_dim_cap = 20;         // NS enumeration: max affine dimension
};

/// All deterministic local strategies as behaviors; count = prod_i o_i^{s_i}.
VertexSet local_deterministic_vertices(const Scenario &s, const PolytopeCaps &caps = {});

/// Equality system (normalization + single-party no-signaling) defining the
/// affine hull of the no-signaling polytope: rows A with A p = rhs.
std::pair<RatMatrix, RatVector> ns_equality_rows(const Scenario &s);

/// Vertices of the no-signaling polytope via exact double description over
/// the H-representation (equalities + entrywise nonnegativity).
VertexSet ns_polytope_vertices(const Scenario &s, const PolytopeCaps &caps = {});

/// Extreme points of the hybrid model across `cut`: all products of a
/// no-signaling vertex on each side.
VertexSet hybrid_vertices(const Scenario &s, const Bipartition &cut, const PolytopeCaps &caps = {});

/// Rank-based extremality witness within the no-signaling polytope.
bool is_extremal_in_ns(const Scenario &s, const RatBehavior &v);

}  // namespace nonloc

#endif
