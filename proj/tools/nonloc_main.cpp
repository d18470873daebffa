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

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "nonloc/io.hpp"

namespace {

using namespace nonloc;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitCertFail = 4;

struct GlobalOpts {
    std::string mode;  // "", "rational" or "float"
    double eps = 1e-9;
    size_t vertex_cap = 1'000'000;
    std::string out;
    uint64_t seed = 0;  // reserved for randomized suites; kept for reproducible artifacts
};

PolytopeCaps caps_of(const GlobalOpts &g) {
    PolytopeCaps caps;
    caps.deterministic_cap = g.vertex_cap;
    return caps;
}

void emit(const GlobalOpts &g, const Json &j) {
    std::string text = j.dump(2);
    text += '\n';
    if (g.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(g.out, text);
    }
}

BehaviorVariant load_behavior(const std::string &path, const std::string &mode_override) {
    BehaviorVariant b = behavior_from_json(load_json_file(path));
    if (mode_override == "rational" && std::holds_alternative<FltBehavior>(b)) {
        return to_rational(std::get<FltBehavior>(b));
    }
    if (mode_override == "float" && std::holds_alternative<RatBehavior>(b)) {
        return to_float(std::get<RatBehavior>(b));
    }
    return b;
}

int run_validate(const GlobalOpts &g, const std::string &in) {
    BehaviorVariant b = load_behavior(in, g.mode);
    ValidationReport report = std::visit(
        [&](const auto &bb) {
            using T = std::decay_t<decltype(bb.at(size_t{0}))>;
            return validate(bb, T(NumTraits<T>::exact ? 0 : g.eps));
        },
        b);
    emit(g, report_to_json(report));
    return report.ok() ? kExitOk : kExitInput;
}

int run_born(const GlobalOpts &g, const std::string &state_path, const std::string &meas_path) {
    PureState psi = state_from_json(load_json_file(state_path));
    MeasurementFamily fam = measurement_family_from_json(load_json_file(meas_path));
    FltBehavior box = born_table(DensityOperator::from_pure(psi), fam);
    emit(g, behavior_to_json(box));
    return kExitOk;
}

template <typename Solver>
int run_decomposition(const GlobalOpts &g, const std::string &in, Solver solver) {
    BehaviorVariant b = load_behavior(in, g.mode);
    Json out = std::visit([&](const auto &bb) { return solver(bb); }, b);
    emit(g, out);
    std::string status = out.contains("status") ? out["status"].get<std::string>() : "optimal";
    if (status == "infeasible-input") return kExitInput;
    if (status == "cap-exceeded") return kExitCap;
    return kExitOk;
}

int run_certify_graph(const GlobalOpts &g, int m) {
    CertificationBundle bundle = certify_complete_graph(m);
    emit(g, bundle_to_json(bundle));
    return bundle.pass ? kExitOk : kExitCertFail;
}

int run_certify_smolin(const GlobalOpts &g, bool negative_control) {
    if (negative_control) {
        Certificate cert = smolin_negative_control();
        emit(g, certificate_to_json(cert));
        return cert.pass ? kExitOk : kExitCertFail;
    }
    CertificationBundle bundle = smolin_demo();
    Json j = bundle_to_json(bundle);
    {
        Json protocols = Json::array();
        for (int p = 0; p < 5; p++) {
            for (int q = p + 1; q < 5; q++) {
                Json e;
                e["pair"] = Json::array({p, q});
                e["protocol"] = protocol_to_json(smolin_pair_protocol(p, q), 20);
                protocols.push_back(std::move(e));
            }
        }
        j["protocols"] = std::move(protocols);
    }
    emit(g, j);
    return bundle.pass ? kExitOk : kExitCertFail;
}

int run_chained_sweep(const GlobalOpts &g, int n_max) {
    std::vector<int> ns;
    for (int n = 2; n <= n_max; n++) ns.push_back(n);
    std::vector<SweepRow> rows = chained_sweep(ns, caps_of(g));
    std::string csv = sweep_to_csv(rows);
    if (g.out.empty()) {
        std::cout << csv;
    } else {
        write_text_file(g.out, csv);
    }
    return kExitOk;
}

int run_ns_vertices(const GlobalOpts &g, const std::vector<int> &settings, const std::vector<int> &outcomes) {
    VertexSet vs = cached_ns_vertices(Scenario(settings, outcomes), caps_of(g));
    emit(g, vertex_set_to_json(vs));
    return kExitOk;
}

int run_fixtures(const std::string &dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto put = [&](const std::string &name, const Json &j) {
        write_text_file((fs::path(dir) / name).string(), j.dump(2) + "\n");
    };
    put("pr_box.json", behavior_to_json(pr_box()));
    put("tsirelson_box.json", behavior_to_json(tsirelson_box()));
    put("ghz_mermin_box.json", behavior_to_json(ghz_mermin_box()));
    put("svetlichny_box.json", behavior_to_json(svetlichny_box()));
    put("pr23_uniform_box.json", behavior_to_json(pr23_uniform_box()));
    put("signaling_box.json", behavior_to_json(signaling_box()));
    put("singlet_state.json", state_to_json(singlet()));
    put("ghz3_state.json", state_to_json(ghz_state(3)));
    put("chsh_measurements.json", measurement_family_to_json(chsh_measurements()));
    for (int m = 3; m <= 6; m++) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < m; u++) {
            for (int v = u + 1; v < m; v++) edges.emplace_back(u, v);
        }
        put("graph_k" + std::to_string(m) + ".json", graph_to_json(m, edges));
    }
    for (int p = 0; p < 5; p++) {
        for (int q = p + 1; q < 5; q++) {
            const std::string names = "ABCDE";
            std::string name = std::string("smolin_protocol_") + names[p] + names[q] + ".json";
            put(name, protocol_to_json(smolin_pair_protocol(p, q), 20));
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local-fraction decompositions and full-nonlocality certificates for correlation tables"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--mode", g.mode, "Numeric mode override: rational|float")
        ->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--eps", g.eps, "Floating-mode tolerance");
    app.add_option("--vertex-cap", g.vertex_cap, "Deterministic vertex enumeration cap");
    app.add_option("--out", g.out, "Output path (stdout when omitted)");
    app.add_option("--seed", g.seed, "Seed recorded for randomized suites");

    std::string in_path, state_path, meas_path, fixture_dir = "fixtures";
    int graph_m = 4, n_max = 5;
    bool negative_control = false;
    std::vector<int> settings, outcomes;

    auto *validate_cmd = app.add_subcommand("validate", "Check a behavior file against all box constraints");
    validate_cmd->add_option("--in", in_path, "Behavior JSON")->required();

    auto *born_cmd = app.add_subcommand("born", "Behavior of a pure state under a measurement family");
    born_cmd->add_option("--state", state_path, "State JSON")->required();
    born_cmd->add_option("--meas", meas_path, "Measurement family JSON")->required();

    auto *lf_cmd = app.add_subcommand("local-fraction", "Maximal local weight of a behavior");
    lf_cmd->add_option("--in", in_path, "Behavior JSON")->required();

    auto *cut_cmd = app.add_subcommand("cut-scan", "Bipartition local fractions for every cut");
    cut_cmd->add_option("--in", in_path, "Behavior JSON")->required();

    auto *sv_cmd = app.add_subcommand("svetlichny", "Tripartite hybrid decomposition");
    sv_cmd->add_option("--in", in_path, "Behavior JSON")->required();

    auto *graph_cmd = app.add_subcommand("certify-graph", "Certify the complete-graph state on m vertices");
    graph_cmd->add_option("--m", graph_m, "Vertex count")->required();

    auto *smolin_cmd = app.add_subcommand("certify-smolin", "Certify the five-copy Smolin system");
    smolin_cmd->add_flag("--negative-control", negative_control, "Run the single-copy control (expected FAIL)");

    auto *sweep_cmd = app.add_subcommand("chained-sweep", "Singlet local-fraction bounds for chained settings");
    sweep_cmd->add_option("--n-max", n_max, "Largest setting count")->required();

    auto *nsv_cmd = app.add_subcommand("ns-vertices", "Enumerate no-signaling polytope vertices");
    nsv_cmd->add_option("--settings", settings, "Per-party setting counts")->required();
    nsv_cmd->add_option("--outcomes", outcomes, "Per-party outcome counts")->required();

    auto *fixtures_cmd = app.add_subcommand("fixtures", "Write the demo fixture files");
    fixtures_cmd->add_option("--out", fixture_dir, "Fixture directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(g, in_path);
        if (born_cmd->parsed()) return run_born(g, state_path, meas_path);
        if (lf_cmd->parsed()) {
            return run_decomposition(g, in_path, [&](const auto &b) {
                return decomposition_to_json(local_fraction(b, caps_of(g), g.eps));
            });
        }
        if (cut_cmd->parsed()) {
            return run_decomposition(g, in_path, [&](const auto &b) {
                auto rows = cut_scan(b, caps_of(g), g.eps);
                Json out = Json::array();
                for (const auto &[cut, r] : rows) {
                    out.push_back(Json{{"cut", cut.describe()}, {"result", decomposition_to_json(r)}});
                }
                Json wrapped;
                wrapped["cuts"] = std::move(out);
                for (const auto &[cut, r] : rows) {
                    if (!r.optimal()) {
                        wrapped["status"] = r.status == SolveStatus::CapExceeded ? "cap-exceeded" : "infeasible-input";
                        break;
                    }
                }
                return wrapped;
            });
        }
        if (sv_cmd->parsed()) {
            return run_decomposition(g, in_path, [&](const auto &b) {
                return decomposition_to_json(svetlichny_decomposition(b, caps_of(g), g.eps));
            });
        }
        if (graph_cmd->parsed()) return run_certify_graph(g, graph_m);
        if (smolin_cmd->parsed()) return run_certify_smolin(g, negative_control);
        if (sweep_cmd->parsed()) return run_chained_sweep(g, n_max);
        if (nsv_cmd->parsed()) return run_ns_vertices(g, settings, outcomes);
        if (fixtures_cmd->parsed()) return run_fixtures(fixture_dir);
    } catch (const CapExceededError &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const StructuralError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SignalingError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ZeroProbabilityError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DimensionError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const LocalityError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
