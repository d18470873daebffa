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

#ifndef NONLOC_ENSEMBLE_HPP
#define NONLOC_ENSEMBLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonloc/behavior.hpp"
#include "nonloc/rational.hpp"
#include "nonloc/tableau.hpp"

namespace nonloc {

/// Assignment of qubits to parties.
struct PartySystem {
    std::vector<std::string> names;
    std::vector<std::vector<int>> qubits_of;

    int party_count() const { return static_cast<int>(qubits_of.size()); }
    int total_qubits() const;
    int owner(int qubit) const;
    void check() const;

    static PartySystem one_qubit_per_party(int n);
};

/// Finite mixture of stabilizer pure states with exact rational weights.
struct StabilizerEnsemble {
    struct Branch {
        Rational weight;
        Tableau state;
    };
    std::vector<Branch> branches;

    int n() const { return branches.empty() ? 0 : branches[0].state.n(); }
    void check() const;

    static StabilizerEnsemble pure(Tableau t);
};

/// One measurement in a protocol. The guard restricts execution to branches
/// where this party's earlier executed outcomes match; guards may only look
/// at the same party's record, which keeps the protocol local.
struct ProtocolStep {
    int party;
    PauliString observable;
    std::vector<std::pair<int, int>> guard;  // (party-local outcome index, required bit)
};

struct Protocol {
    std::vector<ProtocolStep> steps;
    /// Designated output qubits per party (used by certification); empty
    /// means "all qubits of the party".
    std::vector<std::pair<int, std::vector<int>>> outputs;

    std::string canonical_text() const;
    std::vector<int> output_qubits_for(int party, const std::vector<std::vector<int>> &qubits_of) const;
};

struct Leaf {
    Rational weight;
    std::vector<int> outcomes;  // per step: 0/1, or -1 when skipped by guard
    Tableau state;
};

/// Exhaustively enumerates all positive-probability leaves of the protocol
/// over every ensemble branch. Steps may only touch qubits of their own
/// party, and only parties in `measuring` may act. Leaves with identical
/// (stabilizer group, outcome record) are merged; output is sorted by
/// outcome record.
std::vector<Leaf> run_protocol(const StabilizerEnsemble &e, const Protocol &proto, const PartySystem &parties,
                               const std::vector<int> &measuring);

/// List of outcome branches of measuring one Hermitian Pauli word.
struct OutcomeBranch {
    bool outcome;
    Rational probability;
    Tableau state;
};
std::vector<OutcomeBranch> measure_branches(const Tableau &t, const PauliString &obs);

/// Exact Born table for per-party two-outcome Pauli settings; outcome bit 0
/// is the +1 eigenvalue.
RatBehavior born_table_stabilizer(const StabilizerEnsemble &e, const PartySystem &parties,
                                  const std::vector<std::vector<PauliString>> &settings);

/// GHZ_m tableau (|0..0> + |1..1>)/sqrt(2).
Tableau ghz_tableau(int m);

/// Four-qubit Smolin state: equal mixture of psi_i x psi_i over the four
/// Bell states, pairs (0,1) and (2,3).
StabilizerEnsemble smolin_state();

/// Qubit layout of the five-copy Smolin system: copy k occupies qubits
/// 4k..4k+3 in the listed party order; each of the five parties owns 4.
extern const std::vector<std::vector<int>> kSmolinCopyParties;

std::pair<StabilizerEnsemble, PartySystem> smolin_five_copies();

/// Qubit held by `party` within copy `copy_index` of the five-copy layout.
int smolin_qubit(int copy_index, int party);

/// Distillation protocol turning the five-copy Smolin system into a Bell
/// pair between `p` and `q`: each other party Bell-measures (XX then ZZ)
/// its two qubits from the copy missing q and the copy missing p. The
/// designated outputs are p's qubit in the copy missing q and vice versa.
Protocol smolin_pair_protocol(int p, int q);

}  // namespace nonloc

#endif
