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

#include "nonloc/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nonloc {

namespace {

std::vector<int> int_list(const Json &j, const char *what) {
    if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto &v : j) out.push_back(v.get<int>());
    return out;
}

}  // namespace

Json scenario_to_json(const Scenario &s) {
    return Json{{"settings", s.settings()}, {"outcomes", s.outcomes()}};
}

Scenario scenario_from_json(const Json &j) {
    if (!j.contains("settings") || !j.contains("outcomes")) throw StructuralError("scenario needs settings and outcomes");
    return Scenario(int_list(j["settings"], "settings"), int_list(j["outcomes"], "outcomes"));
}

namespace {

template <typename T>
Json behavior_to_json_impl(const Behavior<T> &b, const char *mode) {
    Json entries = Json::array();
    const Scenario &s = b.scenario();
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
            Json e;
            e["x"] = s.decode_setting(xi);
            e["a"] = s.decode_outcome(ai);
            if constexpr (NumTraits<T>::exact) {
                e["p"] = to_fraction_string(b.at(xi * s.outcome_tuples() + ai));
            } else {
                e["p"] = b.at(xi * s.outcome_tuples() + ai);
            }
            entries.push_back(std::move(e));
        }
    }
    return Json{{"scenario", scenario_to_json(s)}, {"mode", mode}, {"table", std::move(entries)}};
}

}  // namespace

Json behavior_to_json(const RatBehavior &b) { return behavior_to_json_impl(b, "rational"); }
Json behavior_to_json(const FltBehavior &b) { return behavior_to_json_impl(b, "float"); }

BehaviorVariant behavior_from_json(const Json &j) {
    if (!j.contains("scenario") || !j.contains("mode") || !j.contains("table")) {
        throw StructuralError("behavior file needs scenario, mode and table");
    }
    Scenario s = scenario_from_json(j["scenario"]);
    std::string mode = j["mode"].get<std::string>();
    if (mode != "rational" && mode != "float") throw StructuralError("behavior mode must be 'rational' or 'float'");

    std::vector<bool> seen(s.table_size(), false);
    auto fill = [&](auto &table, auto parse) {
        for (const auto &e : j["table"]) {
            if (!e.contains("x") || !e.contains("a") || !e.contains("p")) {
                throw StructuralError("behavior table entry needs x, a and p");
            }
            std::vector<int> x = int_list(e["x"], "x");
            std::vector<int> a = int_list(e["a"], "a");
            size_t idx = s.index(x, a);
            if (seen[idx]) throw StructuralError("behavior table repeats an (x,a) entry");
            seen[idx] = true;
            table[idx] = parse(e["p"]);
        }
        for (size_t k = 0; k < seen.size(); k++) {
            if (!seen[k]) {
                throw StructuralError("behavior table is missing entries (first missing flat index " +
                                      std::to_string(k) + ")");
            }
        }
    };

    if (mode == "rational") {
        std::vector<Rational> table(s.table_size());
        fill(table, [](const Json &p) {
            if (p.is_string()) return rational_from_string(p.get<std::string>());
            if (p.is_number_integer()) return Rational(p.get<long>());
            throw StructuralError("rational-mode probabilities must be 'p/q' strings or integers");
        });
        return RatBehavior(s, std::move(table));
    }
    std::vector<double> table(s.table_size());
    fill(table, [](const Json &p) {
        if (p.is_number()) return p.get<double>();
        if (p.is_string()) return to_double(rational_from_string(p.get<std::string>()));
        throw StructuralError("float-mode probabilities must be numbers");
    });
    return FltBehavior(s, std::move(table));
}

Json report_to_json(const ValidationReport &r) {
    Json violations = Json::array();
    for (const auto &v : r.violations) {
        Json e;
        switch (v.kind) {
            case ViolationKind::NonNegativity: e["kind"] = "nonnegativity"; break;
            case ViolationKind::Normalization: e["kind"] = "normalization"; break;
            case ViolationKind::NoSignaling: e["kind"] = "no-signaling"; break;
        }
        if (v.party >= 0) e["party"] = v.party;
        e["detail"] = v.detail;
        e["residual"] = v.residual;
        violations.push_back(std::move(e));
    }
    return Json{{"ok", r.ok()}, {"violations", std::move(violations)}};
}

Json state_to_json(const PureState &psi) {
    Json amps = Json::array();
    for (Eigen::Index k = 0; k < psi.amplitudes.size(); k++) {
        amps.push_back(Json::array({psi.amplitudes(k).real(), psi.amplitudes(k).imag()}));
    }
    return Json{{"dims", psi.dims}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const Json &j) {
    if (!j.contains("dims") || !j.contains("amplitudes")) throw StructuralError("state file needs dims and amplitudes");
    std::vector<int> dims = int_list(j["dims"], "dims");
    const Json &amps = j["amplitudes"];
    CVector v(amps.size());
    for (size_t k = 0; k < amps.size(); k++) {
        const Json &pair = amps[k];
        if (!pair.is_array() || pair.size() != 2) throw StructuralError("amplitudes must be [re,im] pairs");
        v(static_cast<Eigen::Index>(k)) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureState(std::move(v), std::move(dims));
}

namespace {

Json matrix_to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) throw StructuralError("matrix must be a nonempty array of rows");
    CMatrix m(j.size(), j[0].size());
    for (size_t r = 0; r < j.size(); r++) {
        if (j[r].size() != j[0].size()) throw StructuralError("ragged matrix rows");
        for (size_t c = 0; c < j[r].size(); c++) {
            const Json &e = j[r][c];
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

}  // namespace

Json measurement_family_to_json(const MeasurementFamily &fam) {
    Json parties = Json::array();
    for (const auto &party : fam.effects) {
        Json settings = Json::array();
        for (const auto &setting : party) {
            Json effects = Json::array();
            for (const auto &e : setting) effects.push_back(matrix_to_json(e));
            settings.push_back(Json{{"effects", std::move(effects)}});
        }
        parties.push_back(Json{{"settings", std::move(settings)}});
    }
    return Json{{"parties", std::move(parties)}};
}

MeasurementFamily measurement_family_from_json(const Json &j) {
    if (!j.contains("parties")) throw StructuralError("measurement family needs parties");
    MeasurementFamily fam;
    for (const auto &party : j["parties"]) {
        std::vector<std::vector<CMatrix>> settings;
        for (const auto &setting : party.at("settings")) {
            std::vector<CMatrix> effects;
            for (const auto &e : setting.at("effects")) effects.push_back(matrix_from_json(e));
            settings.push_back(std::move(effects));
        }
        fam.effects.push_back(std::move(settings));
    }
    fam.check();
    return fam;
}

Json graph_to_json(int n, const std::vector<std::pair<int, int>> &edges) {
    Json e = Json::array();
    for (auto [u, v] : edges) e.push_back(Json::array({u, v}));
    return Json{{"n", n}, {"edges", std::move(e)}};
}

std::pair<int, std::vector<std::pair<int, int>>> graph_from_json(const Json &j) {
    if (!j.contains("n") || !j.contains("edges")) throw StructuralError("graph file needs n and edges");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw StructuralError("graph edges must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return {n, std::move(edges)};
}

Json protocol_to_json(const Protocol &proto, int n_qubits) {
    Json steps = Json::array();
    for (const auto &step : proto.steps) {
        Json s;
        s["party"] = step.party;
        std::string letters;
        std::string qubits;
        for (int q : step.observable.support()) {
            letters.push_back(step.observable.letter(q));
            if (!qubits.empty()) qubits += ",";
            qubits += std::to_string(q);
        }
        std::string word = (step.observable.sign() < 0 ? "-" : "") + letters + "_(" + qubits + ")";
        s["observable"] = word;
        if (!step.guard.empty()) {
            Json guard = Json::array();
            for (auto [idx, bit] : step.guard) guard.push_back(Json::array({idx, bit}));
            s["condition"] = std::move(guard);
        }
        steps.push_back(std::move(s));
    }
    Json outputs = Json::array();
    for (const auto &[party, qubits] : proto.outputs) {
        outputs.push_back(Json{{"party", party}, {"qubits", qubits}});
    }
    return Json{{"n", n_qubits}, {"steps", std::move(steps)}, {"outputs", std::move(outputs)}};
}

Protocol protocol_from_json(const Json &j, int n_qubits) {
    // Accepts either a bare list of steps or an object with steps/outputs.
    if (!j.is_array() && !j.contains("steps")) throw StructuralError("protocol file needs steps");
    const Json &steps = j.is_array() ? j : j["steps"];
    int n = (!j.is_array() && j.contains("n")) ? j["n"].get<int>() : n_qubits;
    if (n_qubits > 0 && n != n_qubits) throw StructuralError("protocol qubit count does not match the system");
    Protocol proto;
    for (const auto &s : steps) {
        ProtocolStep step{s.at("party").get<int>(), PauliString::parse(n, s.at("observable").get<std::string>()), {}};
        if (s.contains("condition")) {
            for (const auto &g : s["condition"]) {
                step.guard.emplace_back(g[0].get<int>(), g[1].get<int>());
            }
        }
        proto.steps.push_back(std::move(step));
    }
    if (!j.is_array() && j.contains("outputs")) {
        for (const auto &o : j["outputs"]) {
            proto.outputs.emplace_back(o.at("party").get<int>(), int_list(o.at("qubits"), "output qubits"));
        }
    }
    return proto;
}

Json certificate_to_json(const Certificate &c) {
    Json j;
    j["kind"] = c.kind;
    j["subject"] = c.subject;
    if (!c.protocol_hash.empty()) j["protocol_hash"] = c.protocol_hash;
    j["parties"] = c.parties;
    if (c.pair.first >= 0) j["pair"] = Json::array({c.pair.first, c.pair.second});
    j["basis"] = c.basis;
    j["verdict"] = c.pass ? "PASS" : "FAIL";
    if (!c.caveat.empty()) j["caveat"] = c.caveat;
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.audit.empty()) {
        Json audit = Json::array();
        for (const auto &leaf : c.audit) {
            Json e;
            e["outcomes"] = leaf.outcomes;
            e["weight"] = to_fraction_string(leaf.weight);
            e["verdict"] = leaf.pass;
            if (!leaf.note.empty()) e["note"] = leaf.note;
            audit.push_back(std::move(e));
        }
        j["audit"] = std::move(audit);
    }
    if (!c.covering.empty()) {
        Json covering = Json::array();
        for (const auto &[cut, pair] : c.covering) {
            covering.push_back(Json{{"bipartition", Json::array({cut.block_a(), cut.block_b()})},
                                    {"pair", Json::array({pair.first, pair.second})}});
        }
        j["covering"] = std::move(covering);
    }
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    return j;
}

Certificate certificate_from_json(const Json &j) {
    Certificate c;
    c.kind = j.at("kind").get<std::string>();
    c.subject = j.at("subject").get<std::string>();
    if (j.contains("protocol_hash")) c.protocol_hash = j["protocol_hash"].get<std::string>();
    c.parties = j.at("parties").get<int>();
    if (j.contains("pair")) c.pair = {j["pair"][0].get<int>(), j["pair"][1].get<int>()};
    c.basis = j.at("basis").get<std::string>();
    c.pass = j.at("verdict").get<std::string>() == "PASS";
    if (j.contains("caveat")) c.caveat = j["caveat"].get<std::string>();
    if (j.contains("note")) c.note = j["note"].get<std::string>();
    if (j.contains("audit")) {
        for (const auto &e : j["audit"]) {
            LeafAudit leaf;
            leaf.outcomes = int_list(e.at("outcomes"), "audit outcomes");
            leaf.weight = rational_from_string(e.at("weight").get<std::string>());
            leaf.pass = e.at("verdict").get<bool>();
            if (e.contains("note")) leaf.note = e["note"].get<std::string>();
            c.audit.push_back(std::move(leaf));
        }
    }
    if (j.contains("covering")) {
        for (const auto &e : j["covering"]) {
            Bipartition cut(int_list(e.at("bipartition")[0], "block A"), int_list(e.at("bipartition")[1], "block B"),
                            c.parties);
            c.covering.emplace_back(cut, std::make_pair(e.at("pair")[0].get<int>(), e.at("pair")[1].get<int>()));
        }
    }
    if (j.contains("first_failure")) c.first_failure = j["first_failure"].get<std::string>();
    return c;
}

Json bundle_to_json(const CertificationBundle &b) {
    Json pairs = Json::array();
    for (const auto &c : b.pair_certs) pairs.push_back(certificate_to_json(c));
    return Json{{"subject", b.subject},
                {"verdict", b.pass ? "PASS" : "FAIL"},
                {"pair_certificates", std::move(pairs)},
                {"theorem2", certificate_to_json(b.theorem2)}};
}

Json vertex_set_to_json(const VertexSet &vs) {
    Json vertices = Json::array();
    for (const auto &v : vs.vertices) {
        Json table = Json::array();
        for (const auto &p : v.table()) table.push_back(to_fraction_string(p));
        vertices.push_back(std::move(table));
    }
    return Json{{"provenance", Json{{"scenario", scenario_to_json(vs.scenario)},
                                    {"method", vs.method},
                                    {"count", vs.vertices.size()}}},
                {"vertices", std::move(vertices)}};
}

VertexSet vertex_set_from_json(const Json &j) {
    VertexSet vs{scenario_from_json(j.at("provenance").at("scenario")), j.at("provenance").at("method").get<std::string>(), {}};
    for (const auto &v : j.at("vertices")) {
        std::vector<Rational> table;
        for (const auto &p : v) table.push_back(rational_from_string(p.get<std::string>()));
        vs.vertices.emplace_back(vs.scenario, std::move(table));
    }
    if (vs.vertices.size() != j.at("provenance").at("count").get<size_t>()) {
        throw StructuralError("vertex set count does not match provenance");
    }
    return vs;
}

namespace {

template <typename T>
Json decomposition_to_json_impl(const DecompositionResult<T> &r) {
    auto value_json = [](const T &v) -> Json {
        if constexpr (NumTraits<T>::exact) {
            return to_fraction_string(v);
        } else {
            return v == 0 ? 0.0 : v;  // canonicalize -0.0
        }
    };
    Json j;
    switch (r.status) {
        case SolveStatus::Optimal: j["status"] = "optimal"; break;
        case SolveStatus::InfeasibleInput: j["status"] = "infeasible-input"; break;
        case SolveStatus::CapExceeded: j["status"] = "cap-exceeded"; break;
    }
    j["mode"] = r.mode;
    j["model"] = r.model.describe();
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.optimal()) return j;

    Json values;
    values["p_model"] = value_json(r.model_weight);
    values["p_NS"] = value_json(r.p_ns);
    if (r.model.kind == ModelSpec::Kind::Local) values["p_L"] = value_json(r.model_weight);
    if (r.model.kind == ModelSpec::Kind::Cut) values["p_L_cut"] = value_json(r.model_weight);
    if (r.model.kind == ModelSpec::Kind::Svetlichny) {
        auto local_it = r.family_weights.find("local");
        values["p_L"] = value_json(local_it == r.family_weights.end() ? T(0) : local_it->second);
        Json per_cut;
        for (const auto &[family, w] : r.family_weights) {
            if (family != "local") per_cut[family] = value_json(w);
        }
        values["per_cut"] = std::move(per_cut);
    }
    j["values"] = std::move(values);

    Json primal = Json::array();
    for (size_t k = 0; k < r.primal.size(); k++) {
        primal.push_back(Json{{"column", r.primal[k].first},
                              {"family", r.primal_family[k]},
                              {"weight", value_json(r.primal[k].second)}});
    }
    j["primal"] = std::move(primal);

    Json dual;
    Json coeffs = Json::array();
    for (const auto &y : r.dual) coeffs.push_back(value_json(y));
    dual["coefficients"] = std::move(coeffs);
    dual["value_on_target"] = value_json(r.dual_value);
    dual["model_bound"] = 1;
    j["dual"] = std::move(dual);

    if (r.residual) {
        j["residual"] = behavior_to_json(*r.residual);
    }
    j["pivots"] = r.pivots;
    return j;
}

}  // namespace

Json decomposition_to_json(const DecompositionResult<Rational> &r) { return decomposition_to_json_impl(r); }
Json decomposition_to_json(const DecompositionResult<double> &r) { return decomposition_to_json_impl(r); }

std::string sweep_to_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "N,p_L\n";
    for (const auto &row : rows) {
        out << row.n_settings << ',' << Json(row.p_local == 0 ? 0.0 : row.p_local).dump() << '\n';
    }
    return out.str();
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw StructuralError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string &path, const std::string &content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write file '" + path + "'");
    out << content;
}

VertexSet cached_ns_vertices(const Scenario &s, const PolytopeCaps &caps) {
    const char *dir = std::getenv("NONLOC_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return ns_polytope_vertices(s, caps);
    std::string key;
    for (int v : s.settings()) key += std::to_string(v) + "s";
    for (int v : s.outcomes()) key += std::to_string(v) + "o";
    std::filesystem::path path = std::filesystem::path(dir) / ("ns-vertices-" + key + ".json");
    if (std::filesystem::exists(path)) {
        return vertex_set_from_json(load_json_file(path.string()));
    }
    VertexSet vs = ns_polytope_vertices(s, caps);
    std::filesystem::create_directories(path.parent_path());
    write_text_file(path.string(), vertex_set_to_json(vs).dump(2));
    return vs;
}

}  // namespace nonloc
