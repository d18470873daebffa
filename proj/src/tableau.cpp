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

#include "nonloc/tableau.hpp"

#include <algorithm>

namespace nonloc {

Tableau::Tableau(int n) : n_(n) {
    if (n < 1) throw StructuralError("tableau needs at least one qubit");
    rows_.reserve(2 * n);
    for (int k = 0; k < n; k++) rows_.push_back(PauliString::single(n, k, 'X'));  // destabilizers
    for (int k = 0; k < n; k++) rows_.push_back(PauliString::single(n, k, 'Z'));  // stabilizers
}

void Tableau::h(int q) {
    for (auto &row : rows_) {
        bool xb = row.x_bit(q), zb = row.z_bit(q);
        if (xb && zb) row.negate();
        row.set_x(q, zb);
        row.set_z(q, xb);
    }
}

void Tableau::s(int q) {
    for (auto &row : rows_) {
        bool xb = row.x_bit(q), zb = row.z_bit(q);
        if (xb && zb) row.negate();
        row.set_z(q, xb ^ zb);
    }
}

void Tableau::x(int q) {
    for (auto &row : rows_) {
        if (row.z_bit(q)) row.negate();
    }
}

void Tableau::z(int q) {
    for (auto &row : rows_) {
        if (row.x_bit(q)) row.negate();
    }
}

void Tableau::y(int q) {
    for (auto &row : rows_) {
        if (row.x_bit(q) ^ row.z_bit(q)) row.negate();
    }
}

void Tableau::cnot(int control, int target) {
    if (control == target) throw StructuralError("cnot needs distinct qubits");
    for (auto &row : rows_) {
        bool xc = row.x_bit(control), zc = row.z_bit(control);
        bool xt = row.x_bit(target), zt = row.z_bit(target);
        if (xc && zt && !(xt ^ zc)) row.negate();
        row.set_x(target, xt ^ xc);
        row.set_z(control, zc ^ zt);
    }
}

void Tableau::cz(int a, int b) {
    h(b);
    cnot(a, b);
    h(b);
}

std::optional<bool> Tableau::deterministic_outcome(const PauliString &p) const {
    if (!p.hermitian()) throw StructuralError("measured observable must be Hermitian");
    for (int k = 0; k < n_; k++) {
        if (!stab(k).commutes(p)) return std::nullopt;
    }
    PauliString acc(n_);
    for (int k = 0; k < n_; k++) {
        if (!destab(k).commutes(p)) acc.mul(stab(k));
    }
    if (!acc.same_word(p)) throw Error("tableau invariant broken: commuting word outside the stabilizer span");
    int delta = (acc.phase_exp() - p.phase_exp() + 4) & 3;
    if (delta == 0) return false;  // +p stabilizes: outcome bit 0
    if (delta == 2) return true;   // -p stabilizes: outcome bit 1
    throw Error("tableau invariant broken: non-Hermitian phase mismatch");
}

void Tableau::collapse(const PauliString &p, bool outcome) {
    if (!p.hermitian()) throw StructuralError("measured observable must be Hermitian");
    int pivot = -1;
    for (int k = 0; k < n_; k++) {
        if (!stab(k).commutes(p)) {
            pivot = k;
            break;
        }
    }
    if (pivot < 0) throw StructuralError("collapse called on a deterministic measurement");
    PauliString old_pivot = stab(pivot);
    for (int r = 0; r < 2 * n_; r++) {
        if (r == n_ + pivot) continue;
        if (!rows_[r].commutes(p)) rows_[r].mul(old_pivot);
    }
    rows_[pivot] = old_pivot;
    PauliString np = p;
    if (outcome) np.negate();
    rows_[n_ + pivot] = np;
}

int rank_restricted(const std::vector<PauliString> &gens, const std::vector<int> &qubits) {
    const size_t cols = 2 * qubits.size();
    const size_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(gens.size());
    for (const auto &g : gens) {
        std::vector<uint64_t> bits(words, 0);
        for (size_t k = 0; k < qubits.size(); k++) {
            if (g.x_bit(qubits[k])) bits[(2 * k) >> 6] |= uint64_t{1} << ((2 * k) & 63);
            if (g.z_bit(qubits[k])) bits[(2 * k + 1) >> 6] |= uint64_t{1} << ((2 * k + 1) & 63);
        }
        rows.push_back(std::move(bits));
    }
    int rank = 0;
    for (size_t col = 0; col < cols; col++) {
        size_t w = col >> 6;
        uint64_t mask = uint64_t{1} << (col & 63);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & mask)) pivot++;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != static_cast<size_t>(rank) && (rows[r][w] & mask)) {
                for (size_t ww = 0; ww < words; ww++) rows[r][ww] ^= rows[rank][ww];
            }
        }
        rank++;
    }
    return rank;
}

int Tableau::entropy(const std::vector<int> &qubits) const {
    if (qubits.empty()) return 0;
    std::vector<PauliString> gens;
    gens.reserve(n_);
    for (int k = 0; k < n_; k++) gens.push_back(stab(k));
    return rank_restricted(gens, qubits) - static_cast<int>(qubits.size());
}

std::vector<PauliString> Tableau::restricted_subgroup(const std::vector<int> &qubits) const {
    std::vector<bool> keep(n_, false);
    for (int q : qubits) keep[q] = true;
    std::vector<int> comp;
    for (int q = 0; q < n_; q++) {
        if (!keep[q]) comp.push_back(q);
    }

    std::vector<PauliString> rows;
    rows.reserve(n_);
    for (int k = 0; k < n_; k++) rows.push_back(stab(k));

    // Eliminate the complement columns; rows left without complement support
    // generate the subgroup inside `qubits`.
    size_t used = 0;
    for (int q : comp) {
        for (int which = 0; which < 2; which++) {
            auto bit = [&](const PauliString &p) { return which == 0 ? p.x_bit(q) : p.z_bit(q); };
            size_t pivot = used;
            while (pivot < rows.size() && !bit(rows[pivot])) pivot++;
            if (pivot == rows.size()) continue;
            std::swap(rows[used], rows[pivot]);
            for (size_t r = used + 1; r < rows.size(); r++) {
                if (bit(rows[r])) rows[r].mul(rows[used]);
            }
            used++;
        }
    }

    std::vector<PauliString> sub;
    for (size_t r = used; r < rows.size(); r++) {
        PauliString relabeled(static_cast<int>(qubits.size()));
        for (size_t k = 0; k < qubits.size(); k++) {
            relabeled.set_x(static_cast<int>(k), rows[r].x_bit(qubits[k]));
            relabeled.set_z(static_cast<int>(k), rows[r].z_bit(qubits[k]));
        }
        relabeled.set_phase_exp(rows[r].phase_exp());
        sub.push_back(std::move(relabeled));
    }
    return sub;
}

std::vector<PauliString> canonicalize_generators(std::vector<PauliString> gens) {
    if (gens.empty()) return gens;
    const int n = gens[0].n();
    size_t done = 0;
    // Signed RREF over columns (x_0..x_{n-1}, z_0..z_{n-1}).
    for (int col = 0; col < 2 * n; col++) {
        int q = col % n;
        bool is_x = col < n;
        auto bit = [&](const PauliString &p) { return is_x ? p.x_bit(q) : p.z_bit(q); };
        size_t pivot = done;
        while (pivot < gens.size() && !bit(gens[pivot])) pivot++;
        if (pivot == gens.size()) continue;
        std::swap(gens[done], gens[pivot]);
        for (size_t r = 0; r < gens.size(); r++) {
            if (r != done && bit(gens[r])) gens[r].mul(gens[done]);
        }
        done++;
    }
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(done), gens.end());  // drop identity rows
    return gens;
}

std::string Tableau::canonical_string() const {
    std::vector<PauliString> gens;
    gens.reserve(n_);
    for (int k = 0; k < n_; k++) gens.push_back(stab(k));
    gens = canonicalize_generators(std::move(gens));
    std::string out;
    for (const auto &g : gens) {
        out += g.str();
        out += ';';
    }
    return out;
}

Tableau Tableau::graph_state(int n, const std::vector<std::pair<int, int>> &edges) {
    for (auto [u, v] : edges) {
        if (u == v) throw StructuralError("graph adjacency must have zero diagonal");
        if (u < 0 || v < 0 || u >= n || v >= n) throw StructuralError("graph edge out of range");
    }
    Tableau t(n);
    for (int q = 0; q < n; q++) t.h(q);
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        auto e = std::minmax(u, v);
        if (std::find(seen.begin(), seen.end(), std::pair<int, int>(e.first, e.second)) != seen.end()) continue;
        seen.emplace_back(e.first, e.second);
        t.cz(e.first, e.second);
    }
    return t;
}

void Tableau::check_invariants() const {
    for (int i = 0; i < n_; i++) {
        for (int j = 0; j < n_; j++) {
            if (!stab(i).commutes(stab(j))) throw Error("stabilizers do not commute");
            if (!destab(i).commutes(destab(j))) throw Error("destabilizers do not commute");
            bool anti = !destab(i).commutes(stab(j));
            if (anti != (i == j)) throw Error("destabilizer pairing broken");
        }
        if (!stab(i).hermitian()) throw Error("stabilizer with imaginary phase");
    }
    std::vector<PauliString> gens;
    for (int k = 0; k < n_; k++) gens.push_back(stab(k));
    std::vector<int> all(n_);
    for (int q = 0; q < n_; q++) all[q] = q;
    if (rank_restricted(gens, all) != n_) throw Error("stabilizer generators not full rank");
}

}  // namespace nonloc
