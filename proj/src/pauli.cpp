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

#include "nonloc/pauli.hpp"

#include <cctype>
#include <sstream>

namespace nonloc {

namespace {

// i-exponent picked up when multiplying single-qubit letters a*b, with
// letters coded I=0, X=1, Y=2, Z=3 (so the product letter is a^b).
int letter_phase(int a, int b) {
    if (a == 0 || b == 0 || a == b) return 0;
    // X.Y = iZ, Y.Z = iX, Z.X = iY are the +i cases.
    if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
    return 3;
}

int letter_code(bool xb, bool zb) {
    return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
}

}  // namespace

PauliString PauliString::single(int n, int qubit, char letter) {
    if (qubit < 0 || qubit >= n) throw StructuralError("pauli qubit index out of range");
    PauliString p(n);
    switch (letter) {
        case 'I': break;
        case 'X': p.set_x(qubit, true); break;
        case 'Y':
            p.set_x(qubit, true);
            p.set_z(qubit, true);
            break;
        case 'Z': p.set_z(qubit, true); break;
        default: throw StructuralError(std::string("unknown Pauli letter '") + letter + "'");
    }
    return p;
}

PauliString PauliString::parse(int n, const std::string &text) {
    PauliString p(n);
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') p.negate();
        pos++;
    }
    std::string letters;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        letters.push_back(text[pos++]);
    }
    if (letters.empty()) throw StructuralError("pauli word '" + text + "' has no letters");

    std::vector<int> qubits;
    if (pos == text.size()) {
        for (size_t q = 0; q < letters.size(); q++) qubits.push_back(static_cast<int>(q));
    } else {
        if (text[pos] != '_') throw StructuralError("malformed pauli word '" + text + "'");
        pos++;
        if (pos >= text.size() || text[pos] != '(') throw StructuralError("malformed pauli word '" + text + "'");
        pos++;
        std::string inner = text.substr(pos);
        if (inner.empty() || inner.back() != ')') throw StructuralError("malformed pauli word '" + text + "'");
        inner.pop_back();
        std::istringstream in(inner);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw StructuralError("malformed qubit list in '" + text + "'");
            qubits.push_back(std::stoi(tok));
        }
    }
    if (qubits.size() != letters.size()) {
        throw StructuralError("pauli word '" + text + "': " + std::to_string(letters.size()) + " letters for " +
                              std::to_string(qubits.size()) + " qubits");
    }
    for (size_t k = 0; k < letters.size(); k++) {
        int q = qubits[k];
        if (q < 0 || q >= n) throw StructuralError("pauli word '" + text + "' touches qubit out of range");
        if (p.x_bit(q) || p.z_bit(q)) throw StructuralError("pauli word '" + text + "' repeats qubit " + std::to_string(q));
        PauliString s = single(n, q, letters[k]);
        p.mul(s);
    }
    return p;
}

bool PauliString::is_identity_word() const {
    for (size_t w = 0; w < x_.size(); w++) {
        if (x_[w] | z_[w]) return false;
    }
    return true;
}

std::vector<int> PauliString::support() const {
    std::vector<int> qs;
    for (int q = 0; q < n_; q++) {
        if (x_bit(q) || z_bit(q)) qs.push_back(q);
    }
    return qs;
}

bool PauliString::commutes(const PauliString &other) const {
    // Symplectic inner product: parity of anticommuting qubit positions.
    uint64_t acc = 0;
    for (size_t w = 0; w < x_.size(); w++) {
        acc ^= (x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]);
    }
    return __builtin_parityll(acc) == 0;
}

void PauliString::mul(const PauliString &other) {
    int e = phase_ + other.phase_;
    for (int q = 0; q < n_; q++) {
        e += letter_phase(letter_code(x_bit(q), z_bit(q)), letter_code(other.x_bit(q), other.z_bit(q)));
    }
    for (size_t w = 0; w < x_.size(); w++) {
        x_[w] ^= other.x_[w];
        z_[w] ^= other.z_[w];
    }
    phase_ = static_cast<uint8_t>(e & 3);
}

std::string PauliString::str() const {
    std::string s;
    switch (phase_) {
        case 0: s = "+"; break;
        case 1: s = "+i"; break;
        case 2: s = "-"; break;
        case 3: s = "-i"; break;
    }
    for (int q = 0; q < n_; q++) s.push_back(letter(q));
    return s;
}

}  // namespace nonloc
