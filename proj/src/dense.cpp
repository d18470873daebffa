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

#include "nonloc/dense.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace nonloc {

namespace {

size_t total_dim(const std::vector<int> &dims) {
    size_t d = 1;
    for (int x : dims) {
        if (x < 2) throw DimensionError("local dimension must be at least 2");
        d *= static_cast<size_t>(x);
    }
    if (d > (size_t{1} << kDenseQubitCap)) {
        throw CapExceededError("dense simulator capped at total dimension 2^" + std::to_string(kDenseQubitCap));
    }
    return d;
}

// Strides for party-major index composition (party 0 most significant).
std::vector<size_t> strides_of(const std::vector<int> &dims) {
    std::vector<size_t> s(dims.size(), 1);
    for (size_t p = dims.size(); p-- > 1;) s[p - 1] = s[p] * static_cast<size_t>(dims[p]);
    return s;
}

}  // namespace

PureState::PureState(CVector amps, std::vector<int> dims_in) : amplitudes(std::move(amps)), dims(std::move(dims_in)) {
    if (static_cast<size_t>(amplitudes.size()) != total_dim(dims)) {
        throw DimensionError("amplitude vector length does not match dims");
    }
    double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-12) {
        throw DimensionError("state vector is not normalized (|norm-1| = " + std::to_string(std::abs(norm - 1.0)) + ")");
    }
}

DensityOperator::DensityOperator(CMatrix mat, std::vector<int> dims_in) : matrix(std::move(mat)), dims(std::move(dims_in)) {
    size_t d = total_dim(dims);
    if (static_cast<size_t>(matrix.rows()) != d || static_cast<size_t>(matrix.cols()) != d) {
        throw DimensionError("density matrix shape does not match dims");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw DimensionError("density matrix is not Hermitian");
    if (std::abs(matrix.trace().real() - 1.0) > 1e-10) throw DimensionError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw DimensionError("density matrix is not positive semidefinite");
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    return DensityOperator(psi.amplitudes * psi.amplitudes.adjoint(), psi.dims);
}

DensityOperator DensityOperator::mixture(const std::vector<PureState> &states, const std::vector<double> &weights) {
    if (states.empty() || states.size() != weights.size()) throw DimensionError("mixture needs matching states/weights");
    CMatrix acc = CMatrix::Zero(states[0].amplitudes.size(), states[0].amplitudes.size());
    for (size_t k = 0; k < states.size(); k++) {
        acc += weights[k] * (states[k].amplitudes * states[k].amplitudes.adjoint());
    }
    return DensityOperator(std::move(acc), states[0].dims);
}

std::vector<int> MeasurementFamily::dims() const {
    std::vector<int> d;
    for (const auto &party : effects) {
        if (party.empty() || party[0].empty()) throw DimensionError("measurement family has an empty party");
        d.push_back(static_cast<int>(party[0][0].rows()));
    }
    return d;
}

Scenario MeasurementFamily::scenario() const {
    std::vector<int> settings, outcomes;
    for (const auto &party : effects) {
        settings.push_back(static_cast<int>(party.size()));
        size_t n_out = party[0].size();
        for (const auto &setting : party) {
            if (setting.size() != n_out) throw DimensionError("outcome count differs across a party's settings");
        }
        outcomes.push_back(static_cast<int>(n_out));
    }
    return Scenario(settings, outcomes);
}

void MeasurementFamily::check() const {
    std::vector<int> d = dims();
    for (size_t p = 0; p < effects.size(); p++) {
        for (const auto &setting : effects[p]) {
            CMatrix sum = CMatrix::Zero(d[p], d[p]);
            for (const auto &e : setting) {
                if (e.rows() != d[p] || e.cols() != d[p]) throw DimensionError("effect shape mismatch");
                if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw DimensionError("effect is not Hermitian");
                Eigen::SelfAdjointEigenSolver<CMatrix> es(e, Eigen::EigenvaluesOnly);
                if (es.eigenvalues().minCoeff() < -1e-10) throw DimensionError("effect is not positive semidefinite");
                sum += e;
            }
            if ((sum - CMatrix::Identity(d[p], d[p])).cwiseAbs().maxCoeff() > 1e-12) {
                throw DimensionError("effects of a setting do not sum to the identity");
            }
        }
    }
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

FltBehavior born_table(const DensityOperator &state, const MeasurementFamily &meas) {
    if (state.dims != meas.dims()) throw DimensionError("state and measurement dims disagree");
    meas.check();
    Scenario s = meas.scenario();
    const int m = s.party_count();
    std::vector<double> table(s.table_size());
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        std::vector<int> x = s.decode_setting(xi);
        for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
            std::vector<int> a = s.decode_outcome(ai);
            CMatrix op = meas.effects[0][x[0]][a[0]];
            for (int p = 1; p < m; p++) op = kron(op, meas.effects[p][x[p]][a[p]]);
            double prob = (state.matrix * op).trace().real();
            table[xi * s.outcome_tuples() + ai] = prob < 0 && prob > -1e-14 ? 0.0 : prob;
        }
    }
    return FltBehavior(s, std::move(table));
}

std::pair<double, std::optional<PureState>> partial_measure(const PureState &state, const std::vector<int> &parties,
                                                            const std::vector<CMatrix> &effects) {
    if (parties.size() != effects.size()) throw DimensionError("one effect per measured party required");
    for (size_t k = 0; k < parties.size(); k++) {
        const CMatrix &e = effects[k];
        int d = state.dims.at(parties[k]);
        if (e.rows() != d || e.cols() != d) throw DimensionError("projector shape mismatch");
        if ((e * e - e).cwiseAbs().maxCoeff() > 1e-10 || (e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
            throw DimensionError("partial_measure requires projectors");
        }
    }
    CMatrix op = embed_operator(state.dims, parties, [&] {
        CMatrix joint = effects[0];
        for (size_t k = 1; k < effects.size(); k++) joint = kron(joint, effects[k]);
        return joint;
    }());
    CVector projected = op * state.amplitudes;
    double prob = projected.squaredNorm();
    if (prob <= 1e-14) return {0.0, std::nullopt};
    return {prob, PureState(projected / std::sqrt(prob), state.dims)};
}

CMatrix reduced_density(const PureState &state, const std::vector<int> &keep) {
    std::vector<int> comp;
    {
        std::vector<bool> used(state.dims.size(), false);
        for (int p : keep) {
            if (p < 0 || static_cast<size_t>(p) >= state.dims.size() || used[p]) {
                throw DimensionError("bad party subset for reduced_density");
            }
            used[p] = true;
        }
        for (size_t p = 0; p < state.dims.size(); p++) {
            if (!used[p]) comp.push_back(static_cast<int>(p));
        }
    }
    std::vector<size_t> strides = strides_of(state.dims);
    size_t dk = 1, dc = 1;
    for (int p : keep) dk *= static_cast<size_t>(state.dims[p]);
    for (int p : comp) dc *= static_cast<size_t>(state.dims[p]);

    auto compose = [&](size_t ik, size_t ic) {
        size_t idx = 0;
        for (size_t q = keep.size(); q-- > 0;) {
            idx += (ik % static_cast<size_t>(state.dims[keep[q]])) * strides[keep[q]];
            ik /= static_cast<size_t>(state.dims[keep[q]]);
        }
        for (size_t q = comp.size(); q-- > 0;) {
            idx += (ic % static_cast<size_t>(state.dims[comp[q]])) * strides[comp[q]];
            ic /= static_cast<size_t>(state.dims[comp[q]]);
        }
        return idx;
    };

    CMatrix rho = CMatrix::Zero(dk, dk);
    for (size_t i = 0; i < dk; i++) {
        for (size_t j = 0; j < dk; j++) {
            Complex acc = 0;
            for (size_t c = 0; c < dc; c++) {
                acc += state.amplitudes(compose(i, c)) * std::conj(state.amplitudes(compose(j, c)));
            }
            rho(i, j) = acc;
        }
    }
    return rho;
}

bool is_maximally_entangled(const PureState &state, const Bipartition &cut, double tol) {
    if (cut.party_count() != state.party_count()) throw DimensionError("bipartition does not match state");
    size_t da = 1, db = 1;
    for (int p : cut.block_a()) da *= static_cast<size_t>(state.dims[p]);
    for (int p : cut.block_b()) db *= static_cast<size_t>(state.dims[p]);
    const std::vector<int> &small = da <= db ? cut.block_a() : cut.block_b();
    size_t d = std::min(da, db);
    CMatrix rho = reduced_density(state, small);
    return (rho - CMatrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff() <= tol;
}

MeasurementFamily chained_measurements(int n_settings) {
    if (n_settings < 2) throw StructuralError("chained measurements need at least 2 settings per party");
    const double pi = std::numbers::pi;
    MeasurementFamily fam;
    fam.effects.resize(2);
    for (int k = 1; k <= n_settings; k++) {
        double ta = (k - 1) * pi / n_settings;
        double tb = (2 * k - 1) * pi / (2 * n_settings);
        fam.effects[0].push_back({planar_projector(ta, 0), planar_projector(ta, 1)});
        fam.effects[1].push_back({planar_projector(tb, 0), planar_projector(tb, 1)});
    }
    return fam;
}

PureState ghz_state(int parties) {
    if (parties < 1) throw DimensionError("ghz_state needs at least one party");
    size_t d = size_t{1} << parties;
    CVector amps = CVector::Zero(d);
    amps(0) = 1.0 / std::sqrt(2.0);
    amps(d - 1) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(amps), std::vector<int>(parties, 2));
}

PureState singlet() {
    CVector amps = CVector::Zero(4);
    amps(1) = 1.0 / std::sqrt(2.0);
    amps(2) = -1.0 / std::sqrt(2.0);
    return PureState(std::move(amps), {2, 2});
}

PureState bell_phi_plus() {
    CVector amps = CVector::Zero(4);
    amps(0) = 1.0 / std::sqrt(2.0);
    amps(3) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(amps), {2, 2});
}

CMatrix pauli_matrix(char p) {
    CMatrix m(2, 2);
    const Complex i(0, 1);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw StructuralError(std::string("unknown Pauli letter '") + p + "'");
    }
    return m;
}

CMatrix planar_projector(double theta, int outcome) {
    CMatrix obs = std::cos(theta) * pauli_matrix('Z') + std::sin(theta) * pauli_matrix('X');
    double sign = outcome == 0 ? 1.0 : -1.0;
    return (CMatrix::Identity(2, 2) + sign * obs) / 2.0;
}

CMatrix embed_operator(const std::vector<int> &dims, const std::vector<int> &parties, const CMatrix &u) {
    size_t d = 1;
    for (int x : dims) d *= static_cast<size_t>(x);
    std::vector<size_t> strides = strides_of(dims);
    size_t du = 1;
    for (int p : parties) du *= static_cast<size_t>(dims.at(p));
    if (static_cast<size_t>(u.rows()) != du || static_cast<size_t>(u.cols()) != du) {
        throw DimensionError("operator shape does not match the targeted parties");
    }

    std::vector<int> comp;
    {
        std::vector<bool> used(dims.size(), false);
        for (int p : parties) used[p] = true;
        for (size_t p = 0; p < dims.size(); p++) {
            if (!used[p]) comp.push_back(static_cast<int>(p));
        }
    }
    size_t dc = d / du;
    auto compose = [&](size_t iu, size_t ic) {
        size_t idx = 0;
        for (size_t q = parties.size(); q-- > 0;) {
            idx += (iu % static_cast<size_t>(dims[parties[q]])) * strides[parties[q]];
            iu /= static_cast<size_t>(dims[parties[q]]);
        }
        for (size_t q = comp.size(); q-- > 0;) {
            idx += (ic % static_cast<size_t>(dims[comp[q]])) * strides[comp[q]];
            ic /= static_cast<size_t>(dims[comp[q]]);
        }
        return idx;
    };

    CMatrix out = CMatrix::Zero(d, d);
    for (size_t i = 0; i < du; i++) {
        for (size_t j = 0; j < du; j++) {
            if (u(i, j) == Complex(0, 0)) continue;
            for (size_t c = 0; c < dc; c++) out(compose(i, c), compose(j, c)) = u(i, j);
        }
    }
    return out;
}

}  // namespace nonloc
