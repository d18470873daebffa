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

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace nonloc;
using namespace nonloc::testing;

namespace {

// Independent support oracle: a vertex can carry weight against target b only
// if its support is contained in b's support. When no vertex fits, p = 0.
bool some_vertex_fits_support(const VertexSet &vs, const RatBehavior &b) {
    for (const auto &v : vs.vertices) {
        bool fits = true;
        for (size_t k = 0; k < b.size() && fits; k++) {
            if (sgn(v.at(k)) > 0 && sgn(b.at(k)) == 0) fits = false;
        }
        if (fits) return true;
    }
    return false;
}

RatBehavior reconstruct(const DecompositionResult<Rational> &r, const ColumnSet &cols, const Scenario &s) {
    std::vector<Rational> table(s.table_size(), Rational(0));
    for (size_t k = 0; k < r.primal.size(); k++) {
        const auto &col = cols.columns[r.primal[k].first];
        for (size_t j = 0; j < table.size(); j++) table[j] += r.primal[k].second * col.at(j);
    }
    if (r.residual) {
        for (size_t j = 0; j < table.size(); j++) table[j] += r.p_ns * r.residual->at(j);
    }
    return RatBehavior(s, std::move(table));
}

}  // namespace

TEST_CASE("deterministic boxes have local fraction exactly 1") {
    VertexSet det = local_deterministic_vertices(Scenario({2, 2}, {2, 2}));
    DecompositionResult<Rational> r = local_fraction(det.vertices[5]);
    REQUIRE(r.optimal());
    CHECK(r.model_weight == Rational(1));
    CHECK(r.p_ns == Rational(0));
    CHECK(check_dual_certificate(r, det.vertices[5]));
}

TEST_CASE("PR box has local fraction exactly 0, with a verified dual certificate") {
    RatBehavior pr = pr_box();
    DecompositionResult<Rational> r = local_fraction(pr);
    REQUIRE(r.optimal());
    CHECK(r.model_weight == Rational(0));
    CHECK(r.p_ns == Rational(1));
    CHECK(check_dual_certificate(r, pr));

    // Brute-force cross-check over all 16 deterministic vertices: none fits
    // inside the PR support, so no mixture can have positive weight.
    VertexSet det = local_deterministic_vertices(pr.scenario());
    CHECK(!some_vertex_fits_support(det, pr));

    // Tampered certificate fails re-verification.
    DecompositionResult<Rational> tampered = r;
    tampered.dual[3] += Rational(1, 7);
    CHECK(!check_dual_certificate(tampered, pr));
}

TEST_CASE("tsirelson box local fraction hits 2 - sqrt(2) against the CHSH bound") {
    FltBehavior box = tsirelson_box();
    DecompositionResult<double> r = local_fraction(box);
    REQUIRE(r.optimal());
    const double expected = 2.0 - std::sqrt(2.0);
    CHECK(std::abs(r.model_weight - expected) < 1e-6);
    CHECK(check_dual_certificate(r, box));

    // Analytic cross-check: S(b) <= 2 p_L + 4 (1 - p_L) forces p_L <= (4-S)/2.
    double s = std::abs(correlator(box, 0, 0) + correlator(box, 0, 1) + correlator(box, 1, 0) -
                        correlator(box, 1, 1));
    double bound = (4.0 - s) / 2.0;
    CHECK(r.model_weight <= bound + 1e-9);
    CHECK(std::abs(bound - expected) < 1e-12);  // the LP must achieve the bound
}

TEST_CASE("GHZ Mermin box has local fraction exactly 0 in rational mode") {
    RatBehavior g = ghz_mermin_box();
    DecompositionResult<Rational> r = local_fraction(g);
    REQUIRE(r.optimal());
    CHECK(r.model_weight == Rational(0));
    CHECK(check_dual_certificate(r, g));
}

TEST_CASE("bipartition local fractions: products give 1, straddling PR gives less") {
    RatBehavior box = pr23_uniform_box();
    auto cuts = bipartitions(3);  // {0}:{1,2}, {0,1}:{2}, {0,2}:{1}

    DecompositionResult<Rational> along = bipartition_local_fraction(box, cuts[0]);
    REQUIRE(along.optimal());
    CHECK(along.model_weight == Rational(1));  // PR lives inside the {1,2} side

    DecompositionResult<Rational> across = bipartition_local_fraction(box, cuts[1]);
    REQUIRE(across.optimal());
    CHECK(across.model_weight < 1);
    CHECK(check_dual_certificate(across, box));
}

TEST_CASE("svetlichny decomposition: local and one-cut-nonlocal boxes have p_NS = 0") {
    VertexSet det = local_deterministic_vertices(Scenario({2, 2, 2}, {2, 2, 2}));
    DecompositionResult<Rational> local_box = svetlichny_decomposition(det.vertices[17]);
    REQUIRE(local_box.optimal());
    CHECK(local_box.p_ns == Rational(0));

    DecompositionResult<Rational> pr_in_side = svetlichny_decomposition(pr23_uniform_box());
    REQUIRE(pr_in_side.optimal());
    CHECK(pr_in_side.p_ns == Rational(0));

    CHECK_THROWS_AS(svetlichny_decomposition(pr_box()), StructuralError);
}

TEST_CASE("svetlichny decomposition of the GHZ Mermin box: golden value and cut consistency") {
    RatBehavior g = ghz_mermin_box();
    DecompositionResult<Rational> r = svetlichny_decomposition(g);
    REQUIRE(r.optimal());
    CHECK(check_dual_certificate(r, g));

    Rational cut_sum(0);
    for (const auto &cut : bipartitions(3)) {
        DecompositionResult<Rational> rc = bipartition_local_fraction(g, cut);
        REQUIRE(rc.optimal());
        cut_sum += rc.model_weight;
    }
    // Theorem-2 style consistency: the total hybrid weight cannot exceed the
    // sum of single-cut local fractions.
    CHECK(r.model_weight <= cut_sum);

    // Golden regression value computed by this LP (the Mermin box does not
    // violate Svetlichny, so the hybrid models reproduce it completely).
    CHECK(r.p_ns == Rational(0));
}

TEST_CASE("svetlichny box is fully nonlocal: all cuts zero and p_NS = 1 exactly") {
    RatBehavior box = svetlichny_box();
    REQUIRE(validate(box).ok());
    for (const auto &cut : bipartitions(3)) {
        DecompositionResult<Rational> rc = bipartition_local_fraction(box, cut);
        REQUIRE(rc.optimal());
        CHECK(rc.model_weight == Rational(0));
        CHECK(check_dual_certificate(rc, box));
    }
    DecompositionResult<Rational> r = svetlichny_decomposition(box);
    REQUIRE(r.optimal());
    CHECK(r.p_ns == Rational(1));
}

TEST_CASE("reconstruction identity holds exactly for optimal rational solves") {
    std::mt19937_64 rng(99);
    Scenario s3({2, 2, 2}, {2, 2, 2});
    VertexSet hybrid = hybrid_vertices(s3, bipartitions(3)[0]);
    for (int trial = 0; trial < 10; trial++) {
        RatBehavior b = random_mixture(hybrid, rng);
        DecompositionResult<Rational> r = local_fraction(b);
        REQUIRE(r.optimal());
        ColumnSet cols = build_model_columns(s3, r.model, PolytopeCaps{});
        CHECK(reconstruct(r, cols, s3) == b);
        Rational total = r.model_weight + r.p_ns;
        CHECK(total == Rational(1));
        if (r.residual) CHECK(validate(*r.residual).ok());
    }
}

TEST_CASE("monotonicity and theorem-2 consistency on random tripartite behaviors") {
    std::mt19937_64 rng(314159);
    Scenario s3({2, 2, 2}, {2, 2, 2});
    auto cuts = bipartitions(3);
    std::vector<VertexSet> hybrids;
    for (const auto &cut : cuts) hybrids.push_back(hybrid_vertices(s3, cut));
    VertexSet det = local_deterministic_vertices(s3);

    for (int trial = 0; trial < 50; trial++) {
        // Mix hybrid vertices from all cuts plus deterministic points.
        const VertexSet &pool = (trial % 4 == 3) ? det : hybrids[trial % 3];
        RatBehavior b = random_mixture(pool, rng, 32);
        DecompositionResult<Rational> full = local_fraction(b);
        REQUIRE(full.optimal());
        DecompositionResult<Rational> sv = svetlichny_decomposition(b);
        REQUIRE(sv.optimal());

        Rational cut_sum(0);
        Rational cut_min(2);
        for (const auto &cut : cuts) {
            DecompositionResult<Rational> rc = bipartition_local_fraction(b, cut);
            REQUIRE(rc.optimal());
            CHECK(full.model_weight <= rc.model_weight);  // local model is inside every hybrid model
            cut_sum += rc.model_weight;
            cut_min = std::min(cut_min, rc.model_weight);
        }
        CHECK(Rational(1) - sv.p_ns <= cut_sum);
        CHECK(full.model_weight <= cut_min);
    }
}

TEST_CASE("optimal values are invariant under relabelings") {
    RatBehavior g = ghz_mermin_box();
    DecompositionResult<Rational> base = svetlichny_decomposition(g);
    std::vector<int> perm{1, 0};
    RatBehavior moved = permute_settings(permute_outcomes(g, 2, perm), 0, perm);
    DecompositionResult<Rational> after = svetlichny_decomposition(moved);
    CHECK(base.model_weight == after.model_weight);

    FltBehavior t = tsirelson_box();
    double v1 = local_fraction(t).model_weight;
    FltBehavior moved_t = permute_outcomes(t, 0, perm);
    double v2 = local_fraction(moved_t).model_weight;
    CHECK(std::abs(v1 - v2) < 1e-9);
}

TEST_CASE("invalid or oversized inputs surface as statuses, not crashes") {
    DecompositionResult<Rational> bad = local_fraction(signaling_box());
    CHECK(bad.status == SolveStatus::InfeasibleInput);

    PolytopeCaps tiny;
    tiny.deterministic_cap = 4;
    DecompositionResult<Rational> capped = local_fraction(pr_box(), tiny);
    CHECK(capped.status == SolveStatus::CapExceeded);
    CHECK(capped.message.find("theorem-1") != std::string::npos);
}

TEST_CASE("cuts with a three-party side are outside the LP path") {
    // Their no-signaling polytope is not enumerable under the caps; the
    // solver refuses and points at the certification path instead of
    // silently approximating.
    Scenario s4({2, 2, 2, 2}, {2, 2, 2, 2});
    RatBehavior uniform = RatBehavior::uniform(s4);
    Bipartition cut({0}, {1, 2, 3}, 4);
    DecompositionResult<Rational> r = bipartition_local_fraction(uniform, cut);
    CHECK(r.status == SolveStatus::CapExceeded);
    CHECK(r.message.find("scenario too large for V-enumeration") != std::string::npos);
    CHECK(r.message.find("theorem-1") != std::string::npos);
}
