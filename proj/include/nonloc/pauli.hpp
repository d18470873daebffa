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

#ifndef NONLOC_PAULI_HPP
#define NONLOC_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nonloc/errors.hpp"

namespace nonloc {

/// n-qubit Pauli word i^e . W_1 x ... x W_n with W in {I,X,Y,Z}.
///
/// Letters are stored as (x, z) bit pairs: X=(1,0), Y=(1,1), Z=(0,1).
/// Hermitian words have even phase exponent; observables require it.
class PauliString {
   public:
    explicit PauliString(int n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

    /// Parses "XZ_(3,7)" (letters applied to listed qubits) or a dense word
    /// like "XXZ" covering qubits 0..len-1. A leading '-' negates the sign.
    static PauliString parse(int n, const std::string &text);

    static PauliString single(int n, int qubit, char letter);

    int n() const { return n_; }
    int phase_exp() const { return phase_; }
    void set_phase_exp(int e) { phase_ = static_cast<uint8_t>(((e % 4) + 4) % 4); }
    bool hermitian() const { return (phase_ & 1) == 0; }
    int sign() const {
        if (!hermitian()) throw StructuralError("pauli word with imaginary phase has no sign");
        return phase_ == 0 ? 1 : -1;
    }
    void negate() { phase_ = static_cast<uint8_t>((phase_ + 2) & 3); }

    bool x_bit(int q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(int q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x(int q, bool v) { set_bit(x_, q, v); }
    void set_z(int q, bool v) { set_bit(z_, q, v); }

    char letter(int q) const {
        bool xb = x_bit(q), zb = z_bit(q);
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }

    bool is_identity_word() const;
    std::vector<int> support() const;

    bool commutes(const PauliString &other) const;

    /// this := this * other, tracking the phase exponent.
    void mul(const PauliString &other);

    bool same_word(const PauliString &other) const { return x_ == other.x_ && z_ == other.z_; }
    bool operator==(const PauliString &other) const {
        return n_ == other.n_ && phase_ == other.phase_ && same_word(other);
    }

    std::string str() const;

   private:
    static void set_bit(std::vector<uint64_t> &bits, int q, bool v) {
        if (v) {
            bits[q >> 6] |= uint64_t{1} << (q & 63);
        } else {
            bits[q >> 6] &= ~(uint64_t{1} << (q & 63));
        }
    }

    int n_;
    std::vector<uint64_t> x_, z_;
    uint8_t phase_ = 0;
};

}  // namespace nonloc

#endif
