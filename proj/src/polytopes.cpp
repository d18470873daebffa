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

#include "nonloc/polytopes.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace nonloc {

namespace {

bool table_less(const RatBehavior &a, const RatBehavior &b) {
    const auto &ta = a.table();
    const auto &tb = b.table();
    for (size_t k = 0; k < ta.size(); k++) {
        int c = cmp(ta[k], tb[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

void sort_and_dedup(std::vector<RatBehavior> &vs) {
    std::sort(vs.begin(), vs.end(), table_less);
    vs.erase(std::unique(vs.begin(), vs.end(), [](const RatBehavior &a, const RatBehavior &b) { return a.table() == b.table(); }),
             vs.end());
}

}  // namespace

RatBehavior DeterministicStrategy::to_behavior(const Scenario &s) const {
    std::vector<Rational> table(s.table_size(), Rational(0));
    const int m = s.party_count();
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        std::vector<int> x = s.decode_setting(xi);
        std::vector<int> a(m);
        for (int p = 0; p < m; p++) a[p] = assignment[p][x[p]];
        table[xi * s.outcome_tuples() + s.outcome_index(a)] = 1;
    }
    return RatBehavior(s, std::move(table));
}

VertexSet local_deterministic_vertices(const Scenario &s, const PolytopeCaps &caps) {
    const int m = s.party_count();
    mpz_class count(1);
    for (int p = 0; p < m; p++) {
        mpz_class per_party;
        mpz_ui_pow_ui(per_party.get_mpz_t(), static_cast<unsigned long>(s.outcomes()[p]),
                      static_cast<unsigned long>(s.settings()[p]));
        count *= per_party;
    }
    if (count > static_cast<unsigned long>(caps.deterministic_cap)) {
        throw CapExceededError("deterministic vertex count " + count.get_str() + " exceeds cap " +
                               std::to_string(caps.deterministic_cap));
    }

    VertexSet result{s, "deterministic-enumeration", {}};
    DeterministicStrategy strat;
    strat.assignment.resize(m);
    for (int p = 0; p < m; p++) strat.assignment[p].assign(s.settings()[p], 0);

    while (true) {
        result.vertices.push_back(strat.to_behavior(s));
        // Odometer over (party, setting) cells, last cell fastest.
        int p = m - 1, carried = 1;
        while (p >= 0 && carried) {
            for (int x = s.settings()[p] - 1; x >= 0 && carried; x--) {
                if (++strat.assignment[p][x] < s.outcomes()[p]) {
                    carried = 0;
                } else {
                    strat.assignment[p][x] = 0;
                }
            }
            if (carried) p--;
        }
        if (carried) break;
    }
    return result;
}

std::pair<RatMatrix, RatVector> ns_equality_rows(const Scenario &s) {
    RatMatrix rows;
    RatVector rhs;
    const size_t n = s.table_size();
    const size_t na = s.outcome_tuples();
    const int m = s.party_count();

    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        RatVector row(n, Rational(0));
        for (size_t ai = 0; ai < na; ai++) row[xi * na + ai] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(Rational(1));
    }

    for (int i = 0; i < m && m > 1; i++) {
        const int si = s.settings()[i];
        const int oi = s.outcomes()[i];
        if (si < 2) continue;
        std::vector<int> others = detail::complement_parties(s, std::span<const int>(&i, 1));
        Scenario rest = s.restrict(others);
        for (size_t rx = 0; rx < rest.setting_tuples(); rx++) {
            std::vector<int> xr = rest.decode_setting(rx);
            for (size_t ra = 0; ra < rest.outcome_tuples(); ra++) {
                std::vector<int> ar = rest.decode_outcome(ra);
                std::vector<int> x(m), a(m);
                for (size_t k = 0; k < others.size(); k++) {
                    x[others[k]] = xr[k];
                    a[others[k]] = ar[k];
                }
                for (int xi_own = 1; xi_own < si; xi_own++) {
                    RatVector row(n, Rational(0));
                    for (int ai_own = 0; ai_own < oi; ai_own++) {
                        a[i] = ai_own;
                        x[i] = xi_own;
                        row[s.index(x, a)] += 1;
                        x[i] = 0;
                        row[s.index(x, a)] -= 1;
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(Rational(0));
                }
            }
        }
    }
    return {rows, rhs};
}

namespace {

// Vertex of the working polytope in affine coordinates, with its tight set
// over the constraints processed so far (simplex walls first).
struct DDVertex {
    RatVector y;
    std::vector<bool> tight;
};

Rational eval_constraint(const RatVector &a, const Rational &beta, const RatVector &y) {
    Rational v = beta;
    for (size_t j = 0; j < a.size(); j++) {
        if (sgn(a[j]) != 0) v += a[j] * y[j];
    }
    return v;
}

bool adjacent(const DDVertex &u, const DDVertex &w, const RatMatrix &normals, size_t d) {
    RatMatrix common;
    for (size_t k = 0; k < u.tight.size(); k++) {
        if (u.tight[k] && w.tight[k]) common.push_back(normals[k]);
    }
    if (common.size() < d - 1) return false;
    return rat_rank(std::move(common)) == d - 1;
}

}  // namespace

VertexSet ns_polytope_vertices(const Scenario &s, const PolytopeCaps &caps) {
    if (s.party_count() == 1) {
        // Single-party no-signaling set is a product of simplices; its
        // vertices are exactly the deterministic points.
        VertexSet det = local_deterministic_vertices(s, caps);
        det.method = "single-party-deterministic";
        return det;
    }
    const size_t n = s.table_size();
    if (n > caps.ns_table_dim_cap) {
        throw CapExceededError("scenario too large for V-enumeration (table dimension " + std::to_string(n) + " > " +
                               std::to_string(caps.ns_table_dim_cap) + ")");
    }

    auto [eq, rhs] = ns_equality_rows(s);
    RatMatrix basis = rat_null_space(eq);  // directions spanning the affine hull
    const size_t d = basis.size();
    if (d > caps.ns_affine_dim_cap) {
        throw CapExceededError("scenario too large for V-enumeration (affine dimension " + std::to_string(d) + " > " +
                               std::to_string(caps.ns_affine_dim_cap) + ")");
    }
    // Relative-interior point: the uniform box.
    RatVector center(n, Rational(1, static_cast<long>(s.outcome_tuples())));
    for (auto &c : center) c.canonicalize();

    // Entry constraints in affine coordinates: a_k . y + beta_k >= 0.
    RatMatrix entry_normals(n, RatVector(d));
    RatVector entry_offsets(n);
    for (size_t k = 0; k < n; k++) {
        for (size_t j = 0; j < d; j++) entry_normals[k][j] = basis[j][k];
        entry_offsets[k] = center[k];
    }

    // Bounding simplex: y_j >= -M for each j, and sum_j y_j <= M*d.
    const Rational big_m = Rational(mpz_class(1) << 64);
    RatMatrix normals;
    RatVector offsets;
    for (size_t j = 0; j < d; j++) {
        RatVector a(d, Rational(0));
        a[j] = 1;
        normals.push_back(std::move(a));
        offsets.push_back(big_m);
    }
    normals.push_back(RatVector(d, Rational(-1)));
    offsets.push_back(big_m * static_cast<long>(d));

    std::vector<DDVertex> verts;
    {
        DDVertex v0{RatVector(d, -big_m), std::vector<bool>(d + 1, false)};
        for (size_t j = 0; j < d; j++) v0.tight[j] = true;
        verts.push_back(std::move(v0));
        for (size_t k = 0; k < d; k++) {
            DDVertex v{RatVector(d, -big_m), std::vector<bool>(d + 1, false)};
            v.y[k] = big_m * static_cast<long>(2 * d - 1);
            for (size_t j = 0; j < d; j++) v.tight[j] = (j != k);
            v.tight[d] = true;
            verts.push_back(std::move(v));
        }
    }

    for (size_t k = 0; k < n; k++) {
        const RatVector &a = entry_normals[k];
        const Rational &beta = entry_offsets[k];
        std::vector<Rational> vals(verts.size());
        bool any_negative = false;
        for (size_t i = 0; i < verts.size(); i++) {
            vals[i] = eval_constraint(a, beta, verts[i].y);
            any_negative |= sgn(vals[i]) < 0;
        }
        normals.push_back(a);
        offsets.push_back(beta);
        const size_t n_constraints = normals.size();
        if (!any_negative) {
            for (size_t i = 0; i < verts.size(); i++) verts[i].tight.push_back(sgn(vals[i]) == 0);
            continue;
        }

        std::vector<DDVertex> next;
        for (size_t i = 0; i < verts.size(); i++) {
            if (sgn(vals[i]) >= 0) {
                DDVertex keep = verts[i];
                keep.tight.push_back(sgn(vals[i]) == 0);
                next.push_back(std::move(keep));
            }
        }
        std::map<RatVector, DDVertex> fresh;
        for (size_t i = 0; i < verts.size(); i++) {
            if (sgn(vals[i]) <= 0) continue;
            for (size_t w = 0; w < verts.size(); w++) {
                if (sgn(vals[w]) >= 0) continue;
                if (!adjacent(verts[i], verts[w], normals, d)) continue;
                Rational t = vals[i] / (vals[i] - vals[w]);
                RatVector y(d);
                for (size_t j = 0; j < d; j++) y[j] = verts[i].y[j] + t * (verts[w].y[j] - verts[i].y[j]);
                if (fresh.count(y)) continue;
                DDVertex nv{y, std::vector<bool>(n_constraints, false)};
                for (size_t c = 0; c < n_constraints; c++) {
                    nv.tight[c] = sgn(eval_constraint(normals[c], offsets[c], y)) == 0;
                }
                fresh.emplace(std::move(y), std::move(nv));
            }
        }
        for (auto &kv : fresh) next.push_back(std::move(kv.second));
        verts = std::move(next);
    }

    VertexSet result{s, "double-description", {}};
    for (const auto &v : verts) {
        for (size_t j = 0; j <= d; j++) {
            if (j < d && v.tight[j]) throw Error("double description: bounding wall active at a final vertex");
        }
        RatVector p = center;
        for (size_t j = 0; j < d; j++) {
            if (sgn(v.y[j]) == 0) continue;
            for (size_t k = 0; k < n; k++) p[k] += basis[j][k] * v.y[j];
        }
        result.vertices.emplace_back(s, std::move(p));
    }
    sort_and_dedup(result.vertices);
    return result;
}

VertexSet hybrid_vertices(const Scenario &s, const Bipartition &cut, const PolytopeCaps &caps) {
    if (cut.party_count() != s.party_count()) throw StructuralError("bipartition does not match scenario");
    const auto &pa = cut.block_a();
    const auto &pb = cut.block_b();
    VertexSet va, vb;
    try {
        va = ns_polytope_vertices(s.restrict(pa), caps);
        vb = ns_polytope_vertices(s.restrict(pb), caps);
    } catch (const CapExceededError &e) {
        throw CapExceededError(std::string(e.what()) + " [hybrid side of cut " + cut.describe() + "]");
    }
    VertexSet result{s, "hybrid-product", {}};
    result.vertices.reserve(va.size() * vb.size());
    for (const auto &a : va.vertices) {
        for (const auto &b : vb.vertices) {
            result.vertices.push_back(product_behavior<Rational>(s, pa, a, pb, b));
        }
    }
    sort_and_dedup(result.vertices);
    return result;
}

bool is_extremal_in_ns(const Scenario &s, const RatBehavior &v) {
    auto [rows, rhs] = ns_equality_rows(s);
    const size_t n = s.table_size();
    for (size_t k = 0; k < n; k++) {
        if (sgn(v.at(k)) == 0) {
            RatVector row(n, Rational(0));
            row[k] = 1;
            rows.push_back(std::move(row));
        }
    }
    return rat_rank(std::move(rows)) == n;
}

}  // namespace nonloc
