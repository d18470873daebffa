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

#include "nonloc/ensemble.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nonloc {

int PartySystem::total_qubits() const {
    int n = 0;
    for (const auto &qs : qubits_of) n += static_cast<int>(qs.size());
    return n;
}

int PartySystem::owner(int qubit) const {
    for (size_t p = 0; p < qubits_of.size(); p++) {
        for (int q : qubits_of[p]) {
            if (q == qubit) return static_cast<int>(p);
        }
    }
    throw StructuralError("qubit " + std::to_string(qubit) + " has no owner");
}

void PartySystem::check() const {
    if (qubits_of.empty()) throw StructuralError("party system needs at least one party");
    if (!names.empty() && names.size() != qubits_of.size()) throw StructuralError("party names/qubits size mismatch");
    int n = total_qubits();
    std::vector<int> owner_count(n, 0);
    for (const auto &qs : qubits_of) {
        if (qs.empty()) throw StructuralError("party with no qubits");
        for (int q : qs) {
            if (q < 0 || q >= n) throw StructuralError("party system qubit out of range");
            owner_count[q]++;
        }
    }
    for (int q = 0; q < n; q++) {
        if (owner_count[q] != 1) throw StructuralError("party system does not partition the qubits");
    }
}

PartySystem PartySystem::one_qubit_per_party(int n) {
    PartySystem ps;
    for (int q = 0; q < n; q++) {
        ps.names.push_back("P" + std::to_string(q));
        ps.qubits_of.push_back({q});
    }
    return ps;
}

void StabilizerEnsemble::check() const {
    if (branches.empty()) throw StructuralError("ensemble with no branches");
    Rational total(0);
    for (const auto &b : branches) {
        if (sgn(b.weight) <= 0) throw StructuralError("ensemble weights must be positive");
        if (b.state.n() != n()) throw StructuralError("ensemble branches with differing qubit counts");
        total += b.weight;
    }
    if (total != 1) throw StructuralError("ensemble weights must sum to 1 exactly");
}

StabilizerEnsemble StabilizerEnsemble::pure(Tableau t) {
    StabilizerEnsemble e;
    e.branches.push_back({Rational(1), std::move(t)});
    return e;
}

std::string Protocol::canonical_text() const {
    std::ostringstream out;
    for (const auto &step : steps) {
        out << step.party << ' ' << step.observable.str();
        for (auto [idx, bit] : step.guard) out << " ?" << idx << '=' << bit;
        out << ';';
    }
    out << '|';
    for (const auto &[party, qubits] : outputs) {
        out << party << ':';
        for (int q : qubits) out << q << ',';
        out << ';';
    }
    return out.str();
}

std::vector<int> Protocol::output_qubits_for(int party, const std::vector<std::vector<int>> &qubits_of) const {
    for (const auto &[p, qs] : outputs) {
        if (p == party) return qs;
    }
    return qubits_of.at(party);
}

std::vector<OutcomeBranch> measure_branches(const Tableau &t, const PauliString &obs) {
    std::vector<OutcomeBranch> out;
    if (auto det = t.deterministic_outcome(obs)) {
        out.push_back({*det, Rational(1), t});
        return out;
    }
    for (int bit = 0; bit < 2; bit++) {
        Tableau branch = t;
        branch.collapse(obs, bit == 1);
        out.push_back({bit == 1, Rational(1, 2), std::move(branch)});
    }
    return out;
}

namespace {

struct WalkFrame {
    Tableau state;
    Rational weight;
    size_t step_idx;
    std::vector<int> outcomes;
    std::vector<std::vector<int>> party_record;
};

}  // namespace

std::vector<Leaf> run_protocol(const StabilizerEnsemble &e, const Protocol &proto, const PartySystem &parties,
                               const std::vector<int> &measuring) {
    e.check();
    parties.check();
    if (parties.total_qubits() != e.n()) throw StructuralError("party system does not cover the ensemble qubits");

    std::vector<bool> may_measure(parties.party_count(), false);
    for (int p : measuring) may_measure.at(p) = true;
    for (const auto &step : proto.steps) {
        if (step.party < 0 || step.party >= parties.party_count()) throw StructuralError("protocol step party out of range");
        if (!may_measure[step.party]) {
            throw LocalityError("protocol step by party " + std::to_string(step.party) +
                                " which is not a designated measuring party");
        }
        if (!step.observable.hermitian()) throw StructuralError("protocol observable must be Hermitian");
        for (int q : step.observable.support()) {
            if (parties.owner(q) != step.party) {
                throw LocalityError("step observable touches qubit " + std::to_string(q) + " owned by party " +
                                    std::to_string(parties.owner(q)) + ", not by the acting party " +
                                    std::to_string(step.party));
            }
        }
    }

    std::map<std::pair<std::vector<int>, std::string>, Leaf> merged;
    auto emit = [&](WalkFrame &&frame) {
        std::string canon = frame.state.canonical_string();
        auto key = std::make_pair(frame.outcomes, std::move(canon));
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(std::move(key), Leaf{frame.weight, frame.outcomes, std::move(frame.state)});
        } else {
            it->second.weight += frame.weight;
        }
    };

    for (const auto &branch : e.branches) {
        std::vector<WalkFrame> stack;
        stack.push_back({branch.state, branch.weight, 0, {}, std::vector<std::vector<int>>(parties.party_count())});
        while (!stack.empty()) {
            WalkFrame frame = std::move(stack.back());
            stack.pop_back();
            if (frame.step_idx == proto.steps.size()) {
                emit(std::move(frame));
                continue;
            }
            const ProtocolStep &step = proto.steps[frame.step_idx];
            bool run = true;
            for (auto [idx, bit] : step.guard) {
                const auto &record = frame.party_record[step.party];
                if (idx < 0 || static_cast<size_t>(idx) >= record.size()) {
                    throw StructuralError("protocol guard refers to an outcome the party has not produced");
                }
                if (record[idx] != bit) {
                    run = false;
                    break;
                }
            }
            if (!run) {
                frame.outcomes.push_back(-1);
                frame.step_idx++;
                stack.push_back(std::move(frame));
                continue;
            }
            if (auto det = frame.state.deterministic_outcome(step.observable)) {
                frame.outcomes.push_back(*det ? 1 : 0);
                frame.party_record[step.party].push_back(*det ? 1 : 0);
                frame.step_idx++;
                stack.push_back(std::move(frame));
                continue;
            }
            for (int bit = 0; bit < 2; bit++) {
                WalkFrame child = frame;
                child.state.collapse(step.observable, bit == 1);
                child.weight /= 2;
                child.outcomes.push_back(bit);
                child.party_record[step.party].push_back(bit);
                child.step_idx++;
                stack.push_back(std::move(child));
            }
        }
    }

    std::vector<Leaf> leaves;
    leaves.reserve(merged.size());
    for (auto &kv : merged) leaves.push_back(std::move(kv.second));
    Rational total(0);
    for (const auto &leaf : leaves) total += leaf.weight;
    if (total != 1) throw Error("protocol leaves do not sum to probability 1");
    return leaves;
}

RatBehavior born_table_stabilizer(const StabilizerEnsemble &e, const PartySystem &parties,
                                  const std::vector<std::vector<PauliString>> &settings) {
    e.check();
    parties.check();
    const int m = parties.party_count();
    if (static_cast<int>(settings.size()) != m) throw StructuralError("settings list does not match party count");
    std::vector<int> setting_counts(m), outcome_counts(m, 2);
    for (int p = 0; p < m; p++) {
        if (settings[p].empty()) throw StructuralError("party with no settings");
        setting_counts[p] = static_cast<int>(settings[p].size());
        for (const auto &obs : settings[p]) {
            if (!obs.hermitian()) throw StructuralError("measurement observable must be Hermitian");
            for (int q : obs.support()) {
                if (parties.owner(q) != p) {
                    throw LocalityError("observable of party " + std::to_string(p) + " touches a foreign qubit");
                }
            }
        }
    }

    Scenario scenario(setting_counts, outcome_counts);
    std::vector<Rational> table(scenario.table_size(), Rational(0));

    struct Node {
        Tableau state;
        Rational weight;
        int party;
        std::vector<int> bits;
    };

    for (size_t xi = 0; xi < scenario.setting_tuples(); xi++) {
        std::vector<int> x = scenario.decode_setting(xi);
        for (const auto &branch : e.branches) {
            std::vector<Node> stack;
            stack.push_back({branch.state, branch.weight, 0, {}});
            while (!stack.empty()) {
                Node node = std::move(stack.back());
                stack.pop_back();
                if (node.party == m) {
                    table[xi * scenario.outcome_tuples() + scenario.outcome_index(node.bits)] += node.weight;
                    continue;
                }
                const PauliString &obs = settings[node.party][x[node.party]];
                if (auto det = node.state.deterministic_outcome(obs)) {
                    node.bits.push_back(*det ? 1 : 0);
                    node.party++;
                    stack.push_back(std::move(node));
                    continue;
                }
                for (int bit = 0; bit < 2; bit++) {
                    Node child = node;
                    child.state.collapse(obs, bit == 1);
                    child.weight /= 2;
                    child.bits.push_back(bit);
                    child.party++;
                    stack.push_back(std::move(child));
                }
            }
        }
    }
    return RatBehavior(scenario, std::move(table));
}

Tableau ghz_tableau(int m) {
    Tableau t(m);
    t.h(0);
    for (int k = 1; k < m; k++) t.cnot(0, k);
    return t;
}

namespace {

// Bell label bits: bx applies X, bz applies Z to the second qubit of the pair.
void prepare_bell(Tableau &t, int q0, int q1, int label) {
    t.h(q0);
    t.cnot(q0, q1);
    if (label & 1) t.x(q1);
    if (label & 2) t.z(q1);
}

}  // namespace

StabilizerEnsemble smolin_state() {
    StabilizerEnsemble e;
    for (int label = 0; label < 4; label++) {
        Tableau t(4);
        prepare_bell(t, 0, 1, label);
        prepare_bell(t, 2, 3, label);
        e.branches.push_back({Rational(1, 4), std::move(t)});
    }
    return e;
}

const std::vector<std::vector<int>> kSmolinCopyParties = {
    {0, 1, 2, 3},  // ABCD
    {0, 1, 2, 4},  // ABCE
    {0, 1, 3, 4},  // ABDE
    {0, 2, 3, 4},  // ACDE
    {1, 2, 3, 4},  // BCDE
};

int smolin_qubit(int copy_index, int party) {
    const auto &slots = kSmolinCopyParties.at(copy_index);
    for (size_t j = 0; j < slots.size(); j++) {
        if (slots[j] == party) return 4 * copy_index + static_cast<int>(j);
    }
    throw StructuralError("party " + std::to_string(party) + " is not in copy " + std::to_string(copy_index));
}

std::pair<StabilizerEnsemble, PartySystem> smolin_five_copies() {
    PartySystem ps;
    ps.names = {"A", "B", "C", "D", "E"};
    ps.qubits_of.assign(5, {});
    for (int copy = 0; copy < 5; copy++) {
        for (int j = 0; j < 4; j++) ps.qubits_of[kSmolinCopyParties[copy][j]].push_back(4 * copy + j);
    }

    StabilizerEnsemble e;
    for (int labels = 0; labels < 1024; labels++) {
        Tableau t(20);
        int rest = labels;
        for (int copy = 0; copy < 5; copy++) {
            int label = rest & 3;
            rest >>= 2;
            prepare_bell(t, 4 * copy, 4 * copy + 1, label);
            prepare_bell(t, 4 * copy + 2, 4 * copy + 3, label);
        }
        e.branches.push_back({Rational(1, 1024), std::move(t)});
    }
    return {std::move(e), std::move(ps)};
}

Protocol smolin_pair_protocol(int p, int q) {
    if (p == q || p < 0 || q < 0 || p > 4 || q > 4) throw StructuralError("smolin pair needs two distinct parties in 0..4");
    const int copy_with_p = 4 - q;  // copy missing q
    const int copy_with_q = 4 - p;  // copy missing p
    Protocol proto;
    for (int w = 0; w < 5; w++) {
        if (w == p || w == q) continue;
        int q1 = smolin_qubit(copy_with_p, w);
        int q2 = smolin_qubit(copy_with_q, w);
        PauliString xx = PauliString::parse(20, "XX_(" + std::to_string(q1) + "," + std::to_string(q2) + ")");
        PauliString zz = PauliString::parse(20, "ZZ_(" + std::to_string(q1) + "," + std::to_string(q2) + ")");
        proto.steps.push_back({w, std::move(xx), {}});
        proto.steps.push_back({w, std::move(zz), {}});
    }
    proto.outputs.emplace_back(p, std::vector<int>{smolin_qubit(copy_with_p, p)});
    proto.outputs.emplace_back(q, std::vector<int>{smolin_qubit(copy_with_q, q)});
    return proto;
}

}  // namespace nonloc
