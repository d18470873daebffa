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

#include <numbers>

#include "helpers.hpp"
#include "nonloc/certify.hpp"
#include "nonloc/io.hpp"

using namespace nonloc;
using namespace nonloc::testing;

namespace {

Certificate ghz_pair_certificate(char basis) {
    StabilizerEnsemble e = StabilizerEnsemble::pure(ghz_tableau(3));
    PartySystem parties = PartySystem::one_qubit_per_party(3);
    Protocol proto;
    proto.steps.push_back({1, PauliString::single(3, 1, basis), {}});
    return theorem1_certify(e, parties, {0, 2}, proto, "ghz-3");
}

}  // namespace

TEST_CASE("GHZ pair (0,2): X on the middle party certifies, Z fails") {
    Certificate pass = ghz_pair_certificate('X');
    CHECK(pass.pass);
    CHECK(pass.audit.size() == 2);
    CHECK(pass.basis == "theorem");
    Rational total(0);
    for (const auto &leaf : pass.audit) {
        CHECK(leaf.pass);
        total += leaf.weight;
    }
    CHECK(total == Rational(1));

    Certificate fail = ghz_pair_certificate('Z');
    CHECK(!fail.pass);
    CHECK(fail.caveat == "criterion not met");
    CHECK(!fail.first_failure.empty());
}

TEST_CASE("certificates replay bit-for-bit") {
    Certificate first = ghz_pair_certificate('X');
    Certificate second = ghz_pair_certificate('X');
    CHECK(certificate_to_json(first).dump() == certificate_to_json(second).dump());
}

TEST_CASE("protocol locality violations are rejected during certification") {
    StabilizerEnsemble e = StabilizerEnsemble::pure(ghz_tableau(3));
    PartySystem parties = PartySystem::one_qubit_per_party(3);
    Protocol proto;
    proto.steps.push_back({0, PauliString::single(3, 0, 'X'), {}});  // pair party measuring
    CHECK_THROWS_AS(theorem1_certify(e, parties, {0, 2}, proto, "ghz-3"), LocalityError);
}

TEST_CASE("complete-graph certification passes for K3..K6 with full leaf counts") {
    for (int m = 3; m <= 6; m++) {
        CertificationBundle bundle = certify_complete_graph(m);
        CHECK(bundle.pass);
        CHECK(bundle.pair_certs.size() == static_cast<size_t>(m * (m - 1) / 2));
        for (const auto &cert : bundle.pair_certs) {
            CHECK(cert.pass);
            CHECK(cert.audit.size() == (size_t{1} << (m - 2)));
        }
        CHECK(bundle.theorem2.pass);
        CHECK(bundle.theorem2.covering.size() == (size_t{1} << (m - 1)) - 1);
        // Covering completeness: each recorded pair straddles its bipartition.
        for (const auto &[cut, pair] : bundle.theorem2.covering) {
            CHECK(cut.straddles(pair.first, pair.second));
        }
    }
}

TEST_CASE("theorem 2 needs every bipartition covered") {
    CertificationBundle k4 = certify_complete_graph(4);
    // Complete pair set: every bipartition is straddled by some pair.
    CHECK(theorem2_certify(k4.pair_certs).pass);

    // Only pairs (0,1) and (3,... picking (0,1) and (2,3) leaves {0,1}:{2,3} uncovered.
    std::vector<Certificate> partial;
    for (const auto &c : k4.pair_certs) {
        if ((c.pair == std::make_pair(0, 1)) || (c.pair == std::make_pair(2, 3))) partial.push_back(c);
    }
    REQUIRE(partial.size() == 2);
    Certificate t2 = theorem2_certify(partial);
    CHECK(!t2.pass);
    CHECK(t2.first_failure.find("0,1:2,3") != std::string::npos);

    // Mixed subjects are rejected.
    std::vector<Certificate> mixed = {k4.pair_certs[0], ghz_pair_certificate('X')};
    CHECK_THROWS_AS(theorem2_certify(mixed), StructuralError);
}

TEST_CASE("smolin demonstration: all 10 pairs distill and the covering passes") {
    CertificationBundle bundle = smolin_demo();
    CHECK(bundle.pass);
    CHECK(bundle.pair_certs.size() == 10);
    for (const auto &cert : bundle.pair_certs) {
        CHECK(cert.pass);
        Rational total(0);
        for (const auto &leaf : cert.audit) total += leaf.weight;
        CHECK(total == Rational(1));
    }
    CHECK(bundle.theorem2.pass);
    CHECK(bundle.theorem2.covering.size() == 15);
    CHECK(bundle.theorem2.note.find("p_NS = 1") != std::string::npos);
}

TEST_CASE("smolin negative control fails as biseparability demands") {
    Certificate control = smolin_negative_control();
    CHECK(!control.pass);
    CHECK(control.caveat == "criterion not met");
}

TEST_CASE("a truncated smolin protocol fails the purity check") {
    // Dropping the ZZ half of each Bell measurement leaves the output pair
    // entangled with the measured qubits, so no outcome group is pure.
    auto [ensemble, parties] = smolin_five_copies();
    Protocol full = smolin_pair_protocol(0, 1);
    Protocol truncated;
    truncated.outputs = full.outputs;
    for (const auto &step : full.steps) {
        if (step.observable.letter(step.observable.support()[0]) == 'X') truncated.steps.push_back(step);
    }
    REQUIRE(truncated.steps.size() == 3);
    Certificate cert = theorem1_certify(ensemble, parties, {0, 1}, truncated, "smolin-5-copies");
    CHECK(!cert.pass);
    CHECK(cert.first_failure.find("not pure") != std::string::npos);
}

TEST_CASE("dense certification path works for non-tableau inputs with a tolerance caveat") {
    PureState ghz = ghz_state(3);
    CMatrix xp = (CMatrix::Identity(2, 2) + pauli_matrix('X')) / 2.0;
    CMatrix xm = (CMatrix::Identity(2, 2) - pauli_matrix('X')) / 2.0;
    CMatrix zp = (CMatrix::Identity(2, 2) + pauli_matrix('Z')) / 2.0;
    CMatrix zm = (CMatrix::Identity(2, 2) - pauli_matrix('Z')) / 2.0;

    Certificate pass = theorem1_certify_dense(ghz, {0, 2}, {{1, {xp, xm}}}, "ghz-3-dense");
    CHECK(pass.pass);
    CHECK(pass.note.find("numerical") != std::string::npos);

    Certificate fail = theorem1_certify_dense(ghz, {0, 2}, {{1, {zp, zm}}}, "ghz-3-dense");
    CHECK(!fail.pass);
}

TEST_CASE("chained sweep: CHSH value at N=2 and strictly decreasing bounds") {
    std::vector<SweepRow> rows = chained_sweep({2, 3, 4, 5});
    REQUIRE(rows.size() == 4);
    CHECK(std::abs(rows[0].p_local - (2.0 - std::sqrt(2.0))) < 1e-6);
    for (size_t k = 1; k < rows.size(); k++) {
        CHECK(rows[k].p_local < rows[k - 1].p_local - 1e-6);
    }
    // Closed form for the singlet at chained planar angles: N (1 - cos(pi/2N)).
    for (const auto &row : rows) {
        double n = row.n_settings;
        CHECK(row.p_local == doctest::Approx(n * (1.0 - std::cos(std::numbers::pi / (2 * n)))).epsilon(1e-9));
    }
    CHECK_THROWS_AS(chained_sweep({1}), StructuralError);
}

TEST_CASE("finite-setting LP values vs certificates on the GHZ box") {
    // The X-on-middle certificates prove the GHZ *state* is fully nonlocal
    // across each cut (an all-measurement, theorem-level statement). The
    // two-setting X/Y *behavior* is far weaker: an explicit hybrid mixture
    // (deterministic single party times a PR-type box on the joint side)
    // reproduces it completely, so each cut fraction equals 1 while the
    // fully local fraction stays 0.
    RatBehavior g = ghz_mermin_box();

    Scenario s1({2}, {2});
    Scenario s2({2, 2}, {2, 2});
    Scenario s3 = g.scenario();
    std::vector<const RatBehavior *> parts;
    std::vector<RatBehavior> storage;
    storage.reserve(4);
    for (int u = 0; u < 2; u++) {
        for (int v = 0; v < 2; v++) {
            std::vector<Rational> a_table(4, Rational(0));
            std::vector<int> x0{0}, x1{1}, au{u}, av{v};
            a_table[s1.index(x0, au)] = 1;
            a_table[s1.index(x1, av)] = 1;
            RatBehavior a_side(s1, a_table);

            std::vector<Rational> bc_table(s2.table_size(), Rational(0));
            for (int y = 0; y < 2; y++) {
                for (int z = 0; z < 2; z++) {
                    int parity = (y == z) ? (y == 0 ? u : 1 - u) : 1 - v;
                    for (int bb = 0; bb < 2; bb++) {
                        std::vector<int> xs{y, z}, as{bb, bb ^ parity};
                        bc_table[s2.index(xs, as)] = Rational(1, 2);
                    }
                }
            }
            RatBehavior bc_side(s2, bc_table);
            std::vector<int> pa{0}, pb{1, 2};
            storage.push_back(product_behavior<Rational>(s3, pa, a_side, pb, bc_side));
        }
    }
    for (const auto &part : storage) parts.push_back(&part);
    RatBehavior mixture = mix(parts, std::vector<Rational>(4, Rational(1, 4)));
    CHECK(mixture == g);

    auto cuts = bipartitions(3);
    DecompositionResult<Rational> rc = bipartition_local_fraction(g, cuts[0]);
    REQUIRE(rc.optimal());
    CHECK(rc.model_weight == Rational(1));  // the LP finds the mixture's value

    // Exact-zero statements live at the fully-local level and in the
    // theorem-level certificates, never in a finite-setting cut LP.
    DecompositionResult<Rational> fully_local = local_fraction(g);
    REQUIRE(fully_local.optimal());
    CHECK(fully_local.model_weight == Rational(0));
    double chained2 = chained_sweep({2})[0].p_local;
    CHECK(to_double(fully_local.model_weight) <= chained2 + 1e-9);
}
