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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonloc/io.hpp"

namespace py = pybind11;
using namespace nonloc;

namespace {

py::object json_to_py(const Json &j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto &e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

/// Python-facing behavior: a tagged union over the two numeric modes.
struct PyBehavior {
    BehaviorVariant value;

    const Scenario &scenario() const {
        return std::visit([](const auto &b) -> const Scenario & { return b.scenario(); }, value);
    }
    std::string mode() const {
        return std::holds_alternative<RatBehavior>(value) ? "rational" : "float";
    }
    double prob(std::vector<int> x, std::vector<int> a) const {
        return std::visit(
            [&](const auto &b) {
                using T = std::decay_t<decltype(b.at(size_t{0}))>;
                if constexpr (NumTraits<T>::exact) {
                    return to_double(b.at(x, a));
                } else {
                    return b.at(x, a);
                }
            },
            value);
    }
    std::string prob_str(std::vector<int> x, std::vector<int> a) const {
        if (const auto *rb = std::get_if<RatBehavior>(&value)) return to_fraction_string(rb->at(x, a));
        return std::to_string(std::get<FltBehavior>(value).at(x, a));
    }
    py::object validate_py(double eps) const {
        return std::visit(
            [&](const auto &b) {
                using T = std::decay_t<decltype(b.at(size_t{0}))>;
                return json_to_py(report_to_json(validate(b, T(NumTraits<T>::exact ? 0.0 : eps))));
            },
            value);
    }
    PyBehavior marginal_py(std::vector<int> subset) const {
        return std::visit([&](const auto &b) { return PyBehavior{BehaviorVariant(marginal(b, subset))}; }, value);
    }
    PyBehavior condition_py(std::vector<int> subset, std::vector<int> x, std::vector<int> a) const {
        return std::visit([&](const auto &b) { return PyBehavior{BehaviorVariant(condition(b, subset, x, a))}; },
                          value);
    }
    std::string to_json_str() const {
        return std::visit([](const auto &b) { return behavior_to_json(b).dump(2); }, value);
    }
};

Bipartition make_cut(const std::vector<int> &block_a, int m) {
    std::vector<int> block_b;
    for (int p = 0; p < m; p++) {
        if (std::find(block_a.begin(), block_a.end(), p) == block_a.end()) block_b.push_back(p);
    }
    return Bipartition(block_a, block_b, m);
}

template <typename T>
py::object solve_to_py(const Behavior<T> &b, const ModelSpec &model, size_t vertex_cap, double eps, bool verify_dual) {
    PolytopeCaps caps;
    caps.deterministic_cap = vertex_cap;
    DecompositionResult<T> r = decompose(b, model, caps, eps);
    Json j = decomposition_to_json(r);
    if (r.optimal() && verify_dual) j["dual_verified"] = check_dual_certificate(r, b, caps);
    return json_to_py(j);
}

py::object decompose_py(const PyBehavior &b, const ModelSpec &model, size_t vertex_cap, double eps, bool verify_dual) {
    return std::visit([&](const auto &bb) { return solve_to_py(bb, model, vertex_cap, eps, verify_dual); }, b.value);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local-fraction decompositions and full-nonlocality certificates for correlation tables";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<SignalingError>(m, "SignalingError", PyExc_ValueError);
    py::register_exception<ZeroProbabilityError>(m, "ZeroProbabilityError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<LocalityError>(m, "LocalityError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<std::vector<int>, std::vector<int>, size_t>(), py::arg("settings"), py::arg("outcomes"),
             py::arg("table_cap") = Scenario::kDefaultTableCap)
        .def_property_readonly("settings", &Scenario::settings)
        .def_property_readonly("outcomes", &Scenario::outcomes)
        .def_property_readonly("party_count", &Scenario::party_count)
        .def_property_readonly("table_size", &Scenario::table_size)
        .def("__repr__", [](const Scenario &s) { return "<Scenario " + s.describe() + ">"; });

    py::class_<PyBehavior>(m, "Behavior")
        .def_static("from_json",
                    [](const std::string &text) { return PyBehavior{behavior_from_json(Json::parse(text))}; })
        .def_static("uniform",
                    [](const Scenario &s, const std::string &mode) {
                        if (mode == "rational") return PyBehavior{RatBehavior::uniform(s)};
                        return PyBehavior{FltBehavior::uniform(s)};
                    },
                    py::arg("scenario"), py::arg("mode") = "rational")
        .def_static("from_table",
                    [](const Scenario &s, const std::vector<std::string> &entries) {
                        std::vector<Rational> table;
                        table.reserve(entries.size());
                        for (const auto &e : entries) table.push_back(rational_from_string(e));
                        return PyBehavior{RatBehavior(s, std::move(table))};
                    },
                    "Rational behavior from a flat table of 'p/q' strings in canonical order")
        .def_static("from_floats",
                    [](const Scenario &s, const std::vector<double> &entries) {
                        return PyBehavior{FltBehavior(s, std::vector<double>(entries))};
                    })
        .def_property_readonly("scenario", &PyBehavior::scenario)
        .def_property_readonly("mode", &PyBehavior::mode)
        .def("prob", &PyBehavior::prob, py::arg("x"), py::arg("a"))
        .def("prob_str", &PyBehavior::prob_str, py::arg("x"), py::arg("a"))
        .def("validate", &PyBehavior::validate_py, py::arg("eps") = 1e-9)
        .def("marginal", &PyBehavior::marginal_py, py::arg("subset"))
        .def("condition", &PyBehavior::condition_py, py::arg("subset"), py::arg("x"), py::arg("a"))
        .def("to_json", &PyBehavior::to_json_str)
        .def("to_float", [](const PyBehavior &b) {
            if (const auto *rb = std::get_if<RatBehavior>(&b.value)) return PyBehavior{to_float(*rb)};
            return b;
        });

    m.def("pr_box", [] { return PyBehavior{pr_box()}; });
    m.def("tsirelson_box", [] { return PyBehavior{tsirelson_box()}; });
    m.def("ghz_mermin_box", [] { return PyBehavior{ghz_mermin_box()}; });
    m.def("svetlichny_box", [] { return PyBehavior{svetlichny_box()}; });
    m.def("signaling_box", [] { return PyBehavior{signaling_box()}; });

    m.def(
        "born_table",
        [](const std::vector<Complex> &amplitudes, const std::vector<int> &dims,
           const std::vector<std::vector<std::vector<std::vector<std::vector<Complex>>>>> &family) {
            CVector v(amplitudes.size());
            for (size_t k = 0; k < amplitudes.size(); k++) v(static_cast<Eigen::Index>(k)) = amplitudes[k];
            PureState psi(std::move(v), dims);
            MeasurementFamily fam;
            for (const auto &party : family) {
                std::vector<std::vector<CMatrix>> settings;
                for (const auto &setting : party) {
                    std::vector<CMatrix> effects;
                    for (const auto &rows : setting) {
                        CMatrix e(rows.size(), rows.empty() ? 0 : rows[0].size());
                        for (size_t r = 0; r < rows.size(); r++) {
                            for (size_t c = 0; c < rows[r].size(); c++) {
                                e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
                            }
                        }
                        effects.push_back(std::move(e));
                    }
                    settings.push_back(std::move(effects));
                }
                fam.effects.push_back(std::move(settings));
            }
            return PyBehavior{born_table(DensityOperator::from_pure(psi), fam)};
        },
        py::arg("amplitudes"), py::arg("dims"), py::arg("family"),
        "Born table of a pure state under per-party effect matrices");

    m.def(
        "local_fraction",
        [](const PyBehavior &b, size_t vertex_cap, double eps, bool verify_dual) {
            return decompose_py(b, ModelSpec{ModelSpec::Kind::Local, std::nullopt}, vertex_cap, eps, verify_dual);
        },
        py::arg("behavior"), py::arg("vertex_cap") = 1'000'000, py::arg("eps") = 1e-9, py::arg("verify_dual") = true);

    m.def(
        "bipartition_local_fraction",
        [](const PyBehavior &b, const std::vector<int> &block_a, size_t vertex_cap, double eps, bool verify_dual) {
            Bipartition cut = make_cut(block_a, b.scenario().party_count());
            return decompose_py(b, ModelSpec{ModelSpec::Kind::Cut, cut}, vertex_cap, eps, verify_dual);
        },
        py::arg("behavior"), py::arg("block_a"), py::arg("vertex_cap") = 1'000'000, py::arg("eps") = 1e-9,
        py::arg("verify_dual") = true);

    m.def(
        "svetlichny_decomposition",
        [](const PyBehavior &b, size_t vertex_cap, double eps, bool verify_dual) {
            if (b.scenario().party_count() != 3) throw StructuralError("svetlichny decomposition needs 3 parties");
            return decompose_py(b, ModelSpec{ModelSpec::Kind::Svetlichny, std::nullopt}, vertex_cap, eps, verify_dual);
        },
        py::arg("behavior"), py::arg("vertex_cap") = 1'000'000, py::arg("eps") = 1e-9, py::arg("verify_dual") = true);

    m.def("cut_scan", [](const PyBehavior &b) {
        return std::visit(
            [&](const auto &bb) {
                Json out = Json::array();
                for (const auto &[cut, r] : cut_scan(bb)) {
                    out.push_back(Json{{"cut", cut.describe()}, {"result", decomposition_to_json(r)}});
                }
                return json_to_py(out);
            },
            b.value);
    });

    m.def("bipartitions", [](int parties) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto &cut : bipartitions(parties)) out.emplace_back(cut.block_a(), cut.block_b());
        return out;
    });

    m.def("local_vertex_count", [](const Scenario &s) { return local_deterministic_vertices(s).size(); });
    m.def("ns_vertices", [](const Scenario &s) {
        VertexSet vs = ns_polytope_vertices(s);
        return json_to_py(vertex_set_to_json(vs));
    });
    m.def("hybrid_vertex_count", [](const Scenario &s, const std::vector<int> &block_a) {
        return hybrid_vertices(s, make_cut(block_a, s.party_count())).size();
    });

    m.def("certify_graph", [](int parties) { return json_to_py(bundle_to_json(certify_complete_graph(parties))); },
          py::arg("m"));
    m.def("certify_smolin", [] { return json_to_py(bundle_to_json(smolin_demo())); });
    m.def("smolin_negative_control", [] { return json_to_py(certificate_to_json(smolin_negative_control())); });

    m.def(
        "chained_sweep",
        [](int n_max) {
            std::vector<int> ns;
            for (int n = 2; n <= n_max; n++) ns.push_back(n);
            std::vector<std::pair<int, double>> out;
            for (const auto &row : chained_sweep(ns)) out.emplace_back(row.n_settings, row.p_local);
            return out;
        },
        py::arg("n_max") = 5);
}
