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

#ifndef NONLOC_DENSE_HPP
#define NONLOC_DENSE_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "nonloc/behavior.hpp"
#include "nonloc/scenario.hpp"

namespace nonloc {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Dense simulation is meant for small systems; the cap guards misuse.
inline constexpr int kDenseQubitCap = 12;

struct PureState {
    CVector amplitudes;
    std::vector<int> dims;

    PureState(CVector amps, std::vector<int> dims_in);
    int party_count() const { return static_cast<int>(dims.size()); }
    size_t dim() const { return static_cast<size_t>(amplitudes.size()); }
};

struct DensityOperator {
    CMatrix matrix;
    std::vector<int> dims;

    DensityOperator(CMatrix mat, std::vector<int> dims_in);
    static DensityOperator from_pure(const PureState &psi);
    static DensityOperator mixture(const std::vector<PureState> &states, const std::vector<double> &weights);
    int party_count() const { return static_cast<int>(dims.size()); }
};

/// Per party: a list of settings, each a list of outcome effects (POVM
/// elements summing to the identity on that party's space).
struct MeasurementFamily {
    std::vector<std::vector<std::vector<CMatrix>>> effects;  // [party][setting][outcome]

    std::vector<int> dims() const;
    Scenario scenario() const;
    void check() const;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Born-rule table P(a|x) = tr(rho . E_{x1}^{a1} x ... x E_{xm}^{am}).
FltBehavior born_table(const DensityOperator &state, const MeasurementFamily &meas);

/// Projects `parties` with one projector each; returns the branch probability
/// and, when it is positive, the renormalized post-measurement state.
std::pair<double, std::optional<PureState>> partial_measure(const PureState &state, const std::vector<int> &parties,
                                                            const std::vector<CMatrix> &effects);

/// Reduced density operator on `keep` (party indices, order preserved).
CMatrix reduced_density(const PureState &state, const std::vector<int> &keep);

/// True iff the smaller side of the cut carries the maximally mixed reduced
/// state (equivalently, a flat Schmidt spectrum of full rank).
bool is_maximally_entangled(const PureState &state, const Bipartition &cut, double tol = 1e-9);

/// N planar qubit measurements per party at chained-Bell angles
/// A_k = (k-1) pi / N and B_k = (2k-1) pi / 2N in the X-Z plane.
MeasurementFamily chained_measurements(int n_settings);

// Common states and operators.
PureState ghz_state(int parties);
PureState singlet();
PureState bell_phi_plus();
CMatrix pauli_matrix(char p);  // 'I','X','Y','Z'
/// Projector onto the +/- eigenspace of cos(theta) Z + sin(theta) X.
CMatrix planar_projector(double theta, int outcome);

/// Full-space operator acting as `u` on the listed parties, identity elsewhere.
CMatrix embed_operator(const std::vector<int> &dims, const std::vector<int> &parties, const CMatrix &u);

}  // namespace nonloc

#endif
