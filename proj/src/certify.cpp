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

#include "nonloc/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nonloc {

uint64_t fnv1a64(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char *digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; k--) {
        out[k] = digits[v & 15];
        v >>= 4;
    }
    return out;
}

namespace {

std::string outcome_str(const std::vector<int> &outcomes) {
    std::string s;
    for (int o : outcomes) s += (o < 0 ? "." : std::to_string(o));
    return s;
}

std::string subgroup_str(const std::vector<PauliString> &gens) {
    std::string out;
    for (const auto &g : gens) {
        out += g.str();
        out += ';';
    }
    return out;
}

// Checks that the subgroup generators describe a pure maximally entangled
// state across out_a : out_b (qubit index spaces already relabeled so that
// out_a occupies the first |out_a| positions).
bool pure_and_maximally_entangled(const std::vector<PauliString> &sub, size_t n_a, size_t n_b, std::string &why) {
    const size_t total = n_a + n_b;
    if (sub.size() != total) {
        why = "pair subsystem is not pure (decoupling failed: subgroup rank " + std::to_string(sub.size()) + " of " +
              std::to_string(total) + ")";
        return false;
    }
    std::vector<int> side_a(n_a);
    for (size_t k = 0; k < n_a; k++) side_a[k] = static_cast<int>(k);
    int entropy = rank_restricted(sub, side_a) - static_cast<int>(n_a);
    int expected = static_cast<int>(std::min(n_a, n_b));
    if (entropy != expected) {
        why = "pair state has entanglement entropy " + std::to_string(entropy) + ", maximal is " +
              std::to_string(expected);
        return false;
    }
    if (expected == 0) {
        why = "pair carries no entanglement";
        return false;
    }
    return true;
}

}  // namespace

Certificate theorem1_certify(const StabilizerEnsemble &e, const PartySystem &parties, std::pair<int, int> pair,
                             const Protocol &proto, const std::string &subject) {
    Certificate cert;
    cert.kind = "theorem1";
    cert.subject = subject;
    cert.protocol_hash = hex64(fnv1a64(proto.canonical_text()));
    cert.parties = parties.party_count();
    cert.pair = pair;

    std::vector<int> measuring;
    for (int p = 0; p < parties.party_count(); p++) {
        if (p != pair.first && p != pair.second) measuring.push_back(p);
    }
    std::vector<Leaf> leaves = run_protocol(e, proto, parties, measuring);

    std::vector<int> out_a = proto.output_qubits_for(pair.first, parties.qubits_of);
    std::vector<int> out_b = proto.output_qubits_for(pair.second, parties.qubits_of);
    std::vector<int> outs = out_a;
    outs.insert(outs.end(), out_b.begin(), out_b.end());

    // Group leaves by outcome record; the conditional pair state of a group
    // must be one definite pure maximally entangled state across all its
    // surviving ensemble branches.
    std::map<std::vector<int>, std::vector<const Leaf *>> groups;
    for (const auto &leaf : leaves) groups[leaf.outcomes].push_back(&leaf);

    cert.pass = true;
    for (const auto &[outcomes, members] : groups) {
        LeafAudit audit;
        audit.outcomes = outcomes;
        audit.weight = 0;
        audit.pass = true;
        std::string reference;
        for (const Leaf *leaf : members) {
            audit.weight += leaf->weight;
            std::vector<PauliString> sub = canonicalize_generators(leaf->state.restricted_subgroup(outs));
            std::string why;
            if (!pure_and_maximally_entangled(sub, out_a.size(), out_b.size(), why)) {
                audit.pass = false;
                audit.note = why;
                break;
            }
            std::string canon = subgroup_str(sub);
            if (reference.empty()) {
                reference = canon;
            } else if (reference != canon) {
                audit.pass = false;
                audit.note = "conditional pair state is a mixture across surviving ensemble branches";
                break;
            }
        }
        if (!audit.pass && cert.pass) {
            cert.pass = false;
            cert.first_failure = "outcomes " + outcome_str(outcomes) + ": " + audit.note;
        }
        cert.audit.push_back(std::move(audit));
    }
    if (!cert.pass) cert.caveat = "criterion not met";
    return cert;
}

Certificate theorem1_certify_dense(const PureState &state, std::pair<int, int> pair,
                                   const std::vector<DenseStep> &steps, const std::string &subject, double tol) {
    Certificate cert;
    cert.kind = "theorem1";
    cert.subject = subject;
    cert.parties = state.party_count();
    cert.pair = pair;
    cert.note = "numerical (tol=" + std::to_string(tol) + ")";
    {
        std::ostringstream text;
        for (const auto &s : steps) text << s.party << ':' << s.projectors.size() << ';';
        cert.protocol_hash = hex64(fnv1a64(text.str()));
    }
    for (const auto &step : steps) {
        if (step.party == pair.first || step.party == pair.second) {
            throw LocalityError("dense protocol step acts on a pair party");
        }
    }

    struct Node {
        PureState state;
        double weight;
        size_t idx;
        std::vector<int> outcomes;
    };
    std::vector<int> pair_parties{pair.first, pair.second};
    Bipartition pair_cut({0}, {1}, 2);

    cert.pass = true;
    std::vector<Node> stack;
    stack.push_back({state, 1.0, 0, {}});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (node.idx == steps.size()) {
            LeafAudit audit;
            audit.outcomes = node.outcomes;
            audit.weight = rational_from_double(node.weight);
            // Pair state must be pure: tr(rho^2) = 1 within tolerance.
            CMatrix rho = reduced_density(node.state, pair_parties);
            double purity = (rho * rho).trace().real();
            PureState pair_state = [&] {
                Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
                Eigen::Index top;
                es.eigenvalues().maxCoeff(&top);
                CVector v = es.eigenvectors().col(top);
                return PureState(v / v.norm(), {state.dims[pair.first], state.dims[pair.second]});
            }();
            audit.pass = purity > 1.0 - tol && is_maximally_entangled(pair_state, pair_cut, tol);
            if (!audit.pass) {
                audit.note = purity <= 1.0 - tol ? "pair state is mixed" : "pair state is not maximally entangled";
                if (cert.pass) {
                    cert.pass = false;
                    cert.first_failure = "outcomes " + outcome_str(audit.outcomes) + ": " + audit.note;
                }
            }
            cert.audit.push_back(std::move(audit));
            continue;
        }
        const DenseStep &step = steps[node.idx];
        for (size_t o = 0; o < step.projectors.size(); o++) {
            auto [prob, post] = partial_measure(node.state, {step.party}, {step.projectors[o]});
            if (prob <= 0 || !post) continue;
            Node child{std::move(*post), node.weight * prob, node.idx + 1, node.outcomes};
            child.outcomes.push_back(static_cast<int>(o));
            stack.push_back(std::move(child));
        }
    }
    if (!cert.pass) cert.caveat = "criterion not met";
    return cert;
}

Certificate theorem2_certify(const std::vector<Certificate> &certs) {
    if (certs.empty()) throw StructuralError("theorem2 needs at least one theorem-1 certificate");
    Certificate out;
    out.kind = "theorem2";
    out.subject = certs[0].subject;
    out.parties = certs[0].parties;
    out.basis = "theorem";
    for (const auto &c : certs) {
        if (c.subject != out.subject) throw StructuralError("theorem2 certificates mix subjects");
        if (c.kind != "theorem1") throw StructuralError("theorem2 expects theorem-1 certificates");
    }

    out.pass = true;
    for (const auto &cut : bipartitions(out.parties)) {
        const Certificate *witness = nullptr;
        for (const auto &c : certs) {
            if (c.pass && cut.straddles(c.pair.first, c.pair.second)) {
                witness = &c;
                break;
            }
        }
        if (witness == nullptr) {
            out.pass = false;
            out.first_failure = "bipartition " + cut.describe() + " is not covered by any passing pair";
            break;
        }
        out.covering.emplace_back(cut, witness->pair);
    }
    if (out.pass) {
        out.note = "p_NS = 1 in the no-signaling scenario";
    } else {
        out.caveat = "criterion not met";
        out.covering.clear();
    }
    return out;
}

CertificationBundle certify_complete_graph(int m) {
    if (m < 3) throw StructuralError("complete-graph certification needs at least 3 parties");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; u++) {
        for (int v = u + 1; v < m; v++) edges.emplace_back(u, v);
    }
    StabilizerEnsemble e = StabilizerEnsemble::pure(Tableau::graph_state(m, edges));
    PartySystem parties = PartySystem::one_qubit_per_party(m);

    CertificationBundle bundle;
    bundle.subject = "graph-K" + std::to_string(m);
    for (int i = 0; i < m; i++) {
        for (int j = i + 1; j < m; j++) {
            Protocol proto;
            for (int v = 0; v < m; v++) {
                if (v == i || v == j) continue;
                proto.steps.push_back({v, PauliString::single(m, v, 'Z'), {}});
            }
            bundle.pair_certs.push_back(theorem1_certify(e, parties, {i, j}, proto, bundle.subject));
        }
    }
    bundle.theorem2 = theorem2_certify(bundle.pair_certs);
    bundle.pass = bundle.theorem2.pass;
    for (const auto &c : bundle.pair_certs) bundle.pass = bundle.pass && c.pass;
    return bundle;
}

CertificationBundle smolin_demo() {
    auto [ensemble, parties] = smolin_five_copies();
    CertificationBundle bundle;
    bundle.subject = "smolin-5-copies";
    for (int p = 0; p < 5; p++) {
        for (int q = p + 1; q < 5; q++) {
            Protocol proto = smolin_pair_protocol(p, q);
            bundle.pair_certs.push_back(theorem1_certify(ensemble, parties, {p, q}, proto, bundle.subject));
        }
    }
    bundle.theorem2 = theorem2_certify(bundle.pair_certs);
    bundle.pass = bundle.theorem2.pass;
    for (const auto &c : bundle.pair_certs) bundle.pass = bundle.pass && c.pass;
    return bundle;
}

Certificate smolin_negative_control() {
    StabilizerEnsemble single = smolin_state();
    PartySystem parties;
    parties.names = {"A", "B", "C", "D"};
    parties.qubits_of = {{0}, {1}, {2}, {3}};
    Protocol proto;
    proto.steps.push_back({2, PauliString::single(4, 2, 'Z'), {}});
    proto.steps.push_back({3, PauliString::single(4, 3, 'Z'), {}});
    return theorem1_certify(single, parties, {0, 1}, proto, "smolin-single-copy");
}

std::vector<SweepRow> chained_sweep(const std::vector<int> &n_values, const PolytopeCaps &caps) {
    std::vector<SweepRow> rows;
    DensityOperator rho = DensityOperator::from_pure(singlet());
    for (int n : n_values) {
        MeasurementFamily fam = chained_measurements(n);
        FltBehavior box = born_table(rho, fam);
        DecompositionResult<double> r = local_fraction(box, caps);
        if (!r.optimal()) throw CapExceededError("chained sweep LP did not solve: " + r.message);
        rows.push_back({n, r.model_weight});
    }
    return rows;
}

}  // namespace nonloc
