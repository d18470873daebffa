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

#ifndef NONLOC_TESTS_HELPERS_HPP
#define NONLOC_TESTS_HELPERS_HPP

#include <Eigen/Eigenvalues>
#include <random>

#include "nonloc/boxes.hpp"
#include "nonloc/dense.hpp"
#include "nonloc/ensemble.hpp"
#include "nonloc/epr2.hpp"
#include "nonloc/polytopes.hpp"

namespace nonloc::testing {

/// Dense operator of a Pauli word.
inline CMatrix pauli_dense(const PauliString &p) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < p.n(); q++) out = kron(out, pauli_matrix(p.letter(q)));
    Complex phase(1, 0);
    switch (p.phase_exp()) {
        case 1: phase = Complex(0, 1); break;
        case 2: phase = Complex(-1, 0); break;
        case 3: phase = Complex(0, -1); break;
        default: break;
    }
    return phase * out;
}

/// Statevector of a stabilizer tableau via the stabilizer projector
/// (independent of the tableau update rules; used as an oracle).
inline PureState tableau_to_dense(const Tableau &t) {
    const int n = t.n();
    const size_t d = size_t{1} << n;
    CMatrix proj = CMatrix::Identity(d, d);
    for (int k = 0; k < n; k++) {
        proj = proj * (CMatrix::Identity(d, d) + pauli_dense(t.stab(k))) / 2.0;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(proj);
    Eigen::Index top;
    es.eigenvalues().maxCoeff(&top);
    CVector v = es.eigenvectors().col(top);
    return PureState(v / v.norm(), std::vector<int>(n, 2));
}

/// |<a|b>| for overlap-up-to-phase comparisons.
inline double overlap(const PureState &a, const PureState &b) {
    return std::abs((a.amplitudes.adjoint() * b.amplitudes)(0, 0));
}

struct RandomCliffordCase {
    Tableau tableau;
    PureState dense;
};

/// Applies the same random Clifford circuit to a tableau and a dense state.
inline RandomCliffordCase random_clifford(int n, int gates, std::mt19937_64 &rng) {
    Tableau t(n);
    CVector amps = CVector::Zero(size_t{1} << n);
    amps(0) = 1.0;
    PureState psi(std::move(amps), std::vector<int>(n, 2));
    std::uniform_int_distribution<int> gate_dist(0, 2);
    std::uniform_int_distribution<int> qubit_dist(0, n - 1);
    const CMatrix h_mat = (CMatrix(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    const CMatrix s_mat = (CMatrix(2, 2) << 1, 0, 0, Complex(0, 1)).finished();
    CMatrix cnot_mat = CMatrix::Zero(4, 4);
    cnot_mat(0, 0) = cnot_mat(1, 1) = cnot_mat(2, 3) = cnot_mat(3, 2) = 1;

    for (int g = 0; g < gates; g++) {
        int kind = gate_dist(rng);
        int q = qubit_dist(rng);
        if (kind == 2 && n > 1) {
            int r = qubit_dist(rng);
            while (r == q) r = qubit_dist(rng);
            t.cnot(q, r);
            CMatrix u = embed_operator(psi.dims, {q, r}, cnot_mat);
            psi = PureState(u * psi.amplitudes, psi.dims);
        } else if (kind == 0) {
            t.h(q);
            psi = PureState(embed_operator(psi.dims, {q}, h_mat) * psi.amplitudes, psi.dims);
        } else {
            t.s(q);
            psi = PureState(embed_operator(psi.dims, {q}, s_mat) * psi.amplitudes, psi.dims);
        }
    }
    return {std::move(t), std::move(psi)};
}

/// Random single-qubit Pauli settings (X, Y or Z per setting) for each party.
inline std::vector<std::vector<PauliString>> random_pauli_settings(int n, int settings_per_party,
                                                                   std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> letter(0, 2);
    const char letters[3] = {'X', 'Y', 'Z'};
    std::vector<std::vector<PauliString>> out(n);
    for (int q = 0; q < n; q++) {
        for (int s = 0; s < settings_per_party; s++) {
            out[q].push_back(PauliString::single(n, q, letters[letter(rng)]));
        }
    }
    return out;
}

/// Measurement family of single-qubit Pauli observables (projector form).
inline MeasurementFamily pauli_family(const std::vector<std::vector<PauliString>> &settings) {
    MeasurementFamily fam;
    for (const auto &party : settings) {
        std::vector<std::vector<CMatrix>> per_setting;
        for (const auto &obs : party) {
            char l = 'I';
            for (int q = 0; q < obs.n(); q++) {
                if (obs.letter(q) != 'I') l = obs.letter(q);
            }
            CMatrix sigma = pauli_matrix(l) * static_cast<double>(obs.sign());
            per_setting.push_back({(CMatrix::Identity(2, 2) + sigma) / 2.0, (CMatrix::Identity(2, 2) - sigma) / 2.0});
        }
        fam.effects.push_back(std::move(per_setting));
    }
    return fam;
}

/// Random convex mixture of a vertex set with denominator-`den` weights.
inline RatBehavior random_mixture(const VertexSet &vs, std::mt19937_64 &rng, int den = 64) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vs.size()) - 1);
    std::vector<Rational> weights(vs.size(), Rational(0));
    for (int k = 0; k < den; k++) weights[pick(rng)] += Rational(1, den);
    std::vector<const RatBehavior *> parts;
    std::vector<Rational> w;
    for (size_t j = 0; j < vs.size(); j++) {
        if (sgn(weights[j]) > 0) {
            parts.push_back(&vs.vertices[j]);
            w.push_back(weights[j]);
        }
    }
    return mix(parts, w);
}

/// E(x,y) correlator of a two-party binary behavior.
template <typename T>
double correlator(const Behavior<T> &b, int x, int y) {
    double e = 0;
    for (int a = 0; a < 2; a++) {
        for (int bb = 0; bb < 2; bb++) {
            std::vector<int> xs{x, y}, as{a, bb};
            double p;
            if constexpr (NumTraits<T>::exact) {
                p = to_double(b.at(xs, as));
            } else {
                p = b.at(xs, as);
            }
            e += ((a ^ bb) ? -1.0 : 1.0) * p;
        }
    }
    return e;
}

/// Three-party correlator for binary outcomes.
template <typename T>
double correlator3(const Behavior<T> &b, int x, int y, int z) {
    double e = 0;
    for (int a = 0; a < 2; a++) {
        for (int bb = 0; bb < 2; bb++) {
            for (int c = 0; c < 2; c++) {
                std::vector<int> xs{x, y, z}, as{a, bb, c};
                double p;
                if constexpr (NumTraits<T>::exact) {
                    p = to_double(b.at(xs, as));
                } else {
                    p = b.at(xs, as);
                }
                e += ((a ^ bb ^ c) ? -1.0 : 1.0) * p;
            }
        }
    }
    return e;
}

}  // namespace nonloc::testing

#endif
