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

#include <cstdlib>
#include <filesystem>

#include "helpers.hpp"
#include "nonloc/io.hpp"

using namespace nonloc;
using namespace nonloc::testing;

TEST_CASE("behavior JSON round-trips byte-identically in both modes") {
    RatBehavior pr = pr_box();
    Json j = behavior_to_json(pr);
    BehaviorVariant back = behavior_from_json(j);
    REQUIRE(std::holds_alternative<RatBehavior>(back));
    CHECK(std::get<RatBehavior>(back) == pr);
    CHECK(behavior_to_json(std::get<RatBehavior>(back)).dump() == j.dump());

    FltBehavior t = tsirelson_box();
    Json jf = behavior_to_json(t);
    BehaviorVariant backf = behavior_from_json(jf);
    REQUIRE(std::holds_alternative<FltBehavior>(backf));
    CHECK(behavior_to_json(std::get<FltBehavior>(backf)).dump() == jf.dump());
}

TEST_CASE("behavior parsing flags missing and duplicate entries as structural errors") {
    Json j = behavior_to_json(pr_box());
    Json missing = j;
    missing["table"].erase(0);
    CHECK_THROWS_AS(behavior_from_json(missing), StructuralError);

    Json duplicated = j;
    duplicated["table"].push_back(duplicated["table"][0]);
    CHECK_THROWS_AS(behavior_from_json(duplicated), StructuralError);

    Json bad_literal = j;
    bad_literal["table"][0]["p"] = "1/0";
    CHECK_THROWS(behavior_from_json(bad_literal));
}

TEST_CASE("state and measurement-family files round-trip") {
    PureState ghz = ghz_state(3);
    PureState back = state_from_json(state_to_json(ghz));
    CHECK(overlap(ghz, back) == doctest::Approx(1.0));

    MeasurementFamily fam = chsh_measurements();
    MeasurementFamily fam_back = measurement_family_from_json(measurement_family_to_json(fam));
    FltBehavior b1 = born_table(DensityOperator::from_pure(singlet()), fam);
    FltBehavior b2 = born_table(DensityOperator::from_pure(singlet()), fam_back);
    for (size_t k = 0; k < b1.size(); k++) CHECK(b1.at(k) == doctest::Approx(b2.at(k)));
}

TEST_CASE("protocol files round-trip including guards and outputs") {
    Protocol proto = smolin_pair_protocol(0, 3);
    proto.steps[0].guard.push_back({0, 1});  // exercise the condition field
    Json j = protocol_to_json(proto, 20);
    Protocol back = protocol_from_json(j, 20);
    CHECK(back.canonical_text() == proto.canonical_text());
    CHECK(protocol_to_json(back, 20).dump() == j.dump());
}

TEST_CASE("protocols also load from a bare step list") {
    Json steps = Json::array();
    steps.push_back(Json{{"party", 1}, {"observable", "X_(1)"}});
    Protocol proto = protocol_from_json(steps, 3);
    REQUIRE(proto.steps.size() == 1);
    CHECK(proto.steps[0].party == 1);
    CHECK(proto.steps[0].observable.letter(1) == 'X');
}

TEST_CASE("svetlichny results report the local weight and per-cut hybrid weights") {
    DecompositionResult<Rational> r = svetlichny_decomposition(ghz_mermin_box());
    Json j = decomposition_to_json(r);
    CHECK(j["values"].contains("p_L"));
    CHECK(j["values"]["per_cut"].size() == 3);
    CHECK(j["values"]["p_NS"] == "0");
}

TEST_CASE("graph files round-trip") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    auto [n, back] = graph_from_json(graph_to_json(3, edges));
    CHECK(n == 3);
    CHECK(back == edges);
}

TEST_CASE("certificates round-trip and re-validate") {
    CertificationBundle bundle = certify_complete_graph(3);
    Json j = certificate_to_json(bundle.theorem2);
    Certificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(back.pass == bundle.theorem2.pass);

    Json j1 = certificate_to_json(bundle.pair_certs[0]);
    Certificate back1 = certificate_from_json(j1);
    CHECK(certificate_to_json(back1).dump() == j1.dump());
}

TEST_CASE("vertex sets export with provenance and reload") {
    VertexSet ns = ns_polytope_vertices(Scenario({2, 2}, {2, 2}));
    Json j = vertex_set_to_json(ns);
    CHECK(j["provenance"]["count"] == 24);
    VertexSet back = vertex_set_from_json(j);
    REQUIRE(back.size() == ns.size());
    for (size_t k = 0; k < ns.size(); k++) CHECK(back.vertices[k] == ns.vertices[k]);
}

TEST_CASE("decomposition results serialize with values, primal, dual and residual") {
    DecompositionResult<Rational> r = local_fraction(pr_box());
    Json j = decomposition_to_json(r);
    CHECK(j["status"] == "optimal");
    CHECK(j["mode"] == "rational");
    CHECK(j["values"]["p_L"] == "0");
    CHECK(j["values"]["p_NS"] == "1");
    CHECK(j.contains("dual"));
    CHECK(j.contains("residual"));

    DecompositionResult<double> rf = local_fraction(tsirelson_box());
    Json jf = decomposition_to_json(rf);
    CHECK(jf["mode"] == "float");
    CHECK(jf["values"]["p_L"].get<double>() == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("sweep CSV has a header and one row per N") {
    std::string csv = sweep_to_csv({{2, 0.5}, {3, 0.4}});
    CHECK(csv == "N,p_L\n2,0.5\n3,0.4\n");
}

TEST_CASE("NS vertex cache writes and reuses content-addressed files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "nonloc-cache-test";
    fs::remove_all(dir);
    setenv("NONLOC_CACHE_DIR", dir.string().c_str(), 1);
    VertexSet first = cached_ns_vertices(Scenario({2, 2}, {2, 2}), PolytopeCaps{});
    CHECK(fs::exists(dir));
    bool found = false;
    for (const auto &entry : fs::directory_iterator(dir)) found |= entry.path().extension() == ".json";
    CHECK(found);
    VertexSet second = cached_ns_vertices(Scenario({2, 2}, {2, 2}), PolytopeCaps{});
    REQUIRE(first.size() == second.size());
    for (size_t k = 0; k < first.size(); k++) CHECK(first.vertices[k] == second.vertices[k]);
    unsetenv("NONLOC_CACHE_DIR");
    fs::remove_all(dir);
}
