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

#ifndef NONLOC_IO_HPP
#define NONLOC_IO_HPP

#include <json.hpp>
#include <string>
#include <variant>

#include "nonloc/boxes.hpp"
#include "nonloc/certify.hpp"
#include "nonloc/dense.hpp"
#include "nonloc/ensemble.hpp"
#include "nonloc/epr2.hpp"
#include "nonloc/polytopes.hpp"

namespace nonloc {

using Json = nlohmann::ordered_json;

using BehaviorVariant = std::variant<RatBehavior, FltBehavior>;

Json scenario_to_json(const Scenario &s);
Scenario scenario_from_json(const Json &j);

Json behavior_to_json(const RatBehavior &b);
Json behavior_to_json(const FltBehavior &b);
BehaviorVariant behavior_from_json(const Json &j);

Json report_to_json(const ValidationReport &r);

Json state_to_json(const PureState &psi);
PureState state_from_json(const Json &j);

Json measurement_family_to_json(const MeasurementFamily &fam);
MeasurementFamily measurement_family_from_json(const Json &j);

Json graph_to_json(int n, const std::vector<std::pair<int, int>> &edges);
std::pair<int, std::vector<std::pair<int, int>>> graph_from_json(const Json &j);

Json protocol_to_json(const Protocol &proto, int n_qubits);
Protocol protocol_from_json(const Json &j, int n_qubits);

Json certificate_to_json(const Certificate &c);
Certificate certificate_from_json(const Json &j);

Json bundle_to_json(const CertificationBundle &b);

Json vertex_set_to_json(const VertexSet &vs);
VertexSet vertex_set_from_json(const Json &j);

Json decomposition_to_json(const DecompositionResult<Rational> &r);
Json decomposition_to_json(const DecompositionResult<double> &r);

std::string sweep_to_csv(const std::vector<SweepRow> &rows);

Json load_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

/// NS vertex enumeration with optional content-addressed caching under the
/// NONLOC_CACHE_DIR environment variable.
VertexSet cached_ns_vertices(const Scenario &s, const PolytopeCaps &caps);

}  // namespace nonloc

#endif
