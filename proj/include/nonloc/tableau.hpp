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

#ifndef NONLOC_TABLEAU_HPP
#define NONLOC_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "nonloc/pauli.hpp"

namespace nonloc {

/// Symplectic stabilizer tableau of a pure stabilizer state: n stabilizer
/// generators plus n destabilizers for deterministic-outcome extraction.
class Tableau {
   public:
    /// |0...0>.
    explicit Tableau(int n);

    int n() const { return n_; }

    void h(int q);
    void s(int q);
    void x(int q);
    void y(int q);
    void z(int q);
    void cnot(int control, int target);
    void cz(int a, int b);

    const PauliString &stab(int k) const { return rows_[n_ + k]; }
    const PauliString &destab(int k) const { return rows_[k]; }

    /// Outcome bit if measuring `p` is deterministic, nullopt when random.
    /// `p` must be a Hermitian Pauli word.
    std::optional<bool> deterministic_outcome(const PauliString &p) const;

    /// Collapses onto the chosen branch of an indeterminate measurement.
    void collapse(const PauliString &p, bool outcome);

    /// Entanglement entropy (in bits) of the qubit subset.
    int entropy(const std::vector<int> &qubits) const;

    /// Generators of the stabilizer subgroup supported inside `qubits`,
    /// re-indexed to the subset (qubit k of the result = qubits[k]).
    std::vector<PauliString> restricted_subgroup(const std::vector<int> &qubits) const;

    /// Canonical serialization of the stabilizer group; equal strings iff
    /// equal stabilizer groups (including signs).
    std::string canonical_string() const;

    /// Graph state with generators X_v prod_{w~v} Z_w.
    static Tableau graph_state(int n, const std::vector<std::pair<int, int>> &edges);

    /// Pairwise commutation, full rank, destabilizer pairing (test support).
    void check_invariants() const;

   private:
    int n_;
    std::vector<PauliString> rows_;  // [0,n): destabilizers, [n,2n): stabilizers
};

/// Canonical (signed RREF) form of a generator list; unique per group.
std::vector<PauliString> canonicalize_generators(std::vector<PauliString> gens);

/// GF(2) rank of the generators' symplectic bits restricted to `qubits`.
int rank_restricted(const std::vector<PauliString> &gens, const std::vector<int> &qubits);

}  // namespace nonloc

#endif
