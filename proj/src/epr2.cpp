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

#include "nonloc/epr2.hpp"

namespace nonloc {

ColumnSet build_model_columns(const Scenario &s, const ModelSpec &model, const PolytopeCaps &caps) {
    ColumnSet out;
    auto add = [&out](VertexSet vs, const std::string &tag) {
        for (auto &v : vs.vertices) {
            out.columns.push_back(std::move(v));
            out.family.push_back(tag);
        }
    };
    switch (model.kind) {
        case ModelSpec::Kind::Local:
            add(local_deterministic_vertices(s, caps), "local");
            break;
        case ModelSpec::Kind::Cut:
            add(hybrid_vertices(s, *model.cut, caps), model.cut->describe());
            break;
        case ModelSpec::Kind::Svetlichny:
            add(local_deterministic_vertices(s, caps), "local");
            for (const auto &cut : bipartitions(s.party_count())) {
                add(hybrid_vertices(s, cut, caps), cut.describe());
            }
            break;
    }
    return out;
}

}  // namespace nonloc
