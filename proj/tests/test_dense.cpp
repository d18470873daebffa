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

#include <doctest.h>

#include <numbers>

#include "helpers.hpp"

using namespace nonloc;
using namespace nonloc::testing;

namespace {

MeasurementFamily z_measurements(int parties) {
    MeasurementFamily fam;
    CMatrix p0 = (CMatrix::Identity(2, 2) + pauli_matrix('Z')) / 2.0;
    CMatrix p1 = (CMatrix::Identity(2, 2) - pauli_matrix('Z')) / 2.0;
    for (int p = 0; p < parties; p++) fam.effects.push_back({{p0, p1}});
    return fam;
}

MeasurementFamily xy_measurements(int parties) {
    MeasurementFamily fam;
    for (int p = 0; p < parties; p++) {
        fam.effects.push_back({{(CMatrix::Identity(2, 2) + pauli_matrix('X')) / 2.0,
                                (CMatrix::Identity(2, 2) - pauli_matrix('X')) / 2.0},
                               {(CMatrix::Identity(2, 2) + pauli_matrix('Y')) / 2.0,
                                (CMatrix::Identity(2, 2) - pauli_matrix('Y')) / 2.0}});
    }
    return fam;
}

}  // namespace

TEST_CASE("born table of |00> under Z is the deterministic box") {
    CVector amps = CVector::Zero(4);
    amps(0) = 1;
    DensityOperator rho = DensityOperator::from_pure(PureState(amps, {2, 2}));
    FltBehavior b = born_table(rho, z_measurements(2));
    std::vector<int> x{0, 0}, a{0, 0};
    CHECK(b.at(x, a) == doctest::Approx(1.0));
    CHECK(validate(b, 1e-12).ok());
}

TEST_CASE("singlet with CHSH-optimal planar settings gives the Tsirelson box") {
    FltBehavior b = tsirelson_box();
    // Correlators are -cos(theta_A - theta_B) for the singlet.
    const double pi = std::numbers::pi;
    double angles_a[2] = {0, pi / 2};
    double angles_b[2] = {pi / 4, -pi / 4};
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            double expected = -std::cos(angles_a[x] - angles_b[y]);
            CHECK(std::abs(expected) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
            CHECK(correlator(b, x, y) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    double chsh = correlator(b, 0, 0) + correlator(b, 0, 1) + correlator(b, 1, 0) - correlator(b, 1, 1);
    CHECK(std::abs(chsh) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("GHZ with X/Y settings reproduces the Mermin correlations") {
    DensityOperator rho = DensityOperator::from_pure(ghz_state(3));
    FltBehavior b = born_table(rho, xy_measurements(3));
    CHECK(correlator3(b, 0, 0, 0) == doctest::Approx(1.0));
    CHECK(correlator3(b, 0, 1, 1) == doctest::Approx(-1.0));
    CHECK(correlator3(b, 1, 0, 1) == doctest::Approx(-1.0));
    CHECK(correlator3(b, 1, 1, 0) == doctest::Approx(-1.0));
    // Uncorrelated triples vanish and single-party marginals are uniform.
    CHECK(correlator3(b, 1, 1, 1) == doctest::Approx(0.0));
    std::vector<int> sub{1};
    FltBehavior m = marginal(b, std::span<const int>(sub), 1e-9);
    for (size_t k = 0; k < m.size(); k++) CHECK(m.at(k) == doctest::Approx(0.5));
}

TEST_CASE("born table rejects dimension mismatches") {
    DensityOperator rho = DensityOperator::from_pure(ghz_state(3));
    CHECK_THROWS_AS(born_table(rho, z_measurements(2)), DimensionError);
}

TEST_CASE("partial measurement of GHZ in X yields Phi+ with the ancilla in |+>") {
    PureState ghz = ghz_state(3);
    CMatrix plus = (CMatrix::Identity(2, 2) + pauli_matrix('X')) / 2.0;
    auto [prob, post] = partial_measure(ghz, {2}, {plus});
    CHECK(prob == doctest::Approx(0.5));
    REQUIRE(post.has_value());
    CVector expected = CVector::Zero(8);
    expected(0) = expected(1) = expected(6) = expected(7) = 0.5;  // (|00>+|11>)/sqrt2 x |+>
    PureState target(expected, {2, 2, 2});
    CHECK(overlap(*post, target) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial measurement keeps product structure on untouched parties") {
    CVector amps = CVector::Zero(4);
    amps(0) = amps(1) = 1.0 / std::sqrt(2.0);  // |0> x |+>
    PureState psi(amps, {2, 2});
    CMatrix plus = (CMatrix::Identity(2, 2) + pauli_matrix('X')) / 2.0;
    auto [prob, post] = partial_measure(psi, {1}, {plus});
    CHECK(prob == doctest::Approx(1.0));
    REQUIRE(post.has_value());
    CMatrix rho0 = reduced_density(*post, {0});
    CHECK((rho0 * rho0 - rho0).cwiseAbs().maxCoeff() < 1e-12);  // still pure: product preserved
}

TEST_CASE("zero-probability branches are flagged without a post-state") {
    CVector amps = CVector::Zero(2);
    amps(0) = 1;
    PureState zero(amps, {2});
    CMatrix one = (CMatrix::Identity(2, 2) - pauli_matrix('Z')) / 2.0;
    auto [prob, post] = partial_measure(zero, {0}, {one});
    CHECK(prob == 0.0);
    CHECK(!post.has_value());
}

TEST_CASE("partial_measure requires projectors") {
    PureState psi = bell_phi_plus();
    CMatrix not_proj = 0.5 * pauli_matrix('X');
    CHECK_THROWS_AS(partial_measure(psi, {0}, {not_proj}), DimensionError);
}

TEST_CASE("branch probabilities over a complete projective setting sum to 1") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        auto c = random_clifford(3, 25, rng);
        double total = 0;
        for (int o = 0; o < 2; o++) {
            CMatrix proj = (CMatrix::Identity(2, 2) + (o == 0 ? 1.0 : -1.0) * pauli_matrix('X')) / 2.0;
            total += partial_measure(c.dense, {1}, {proj}).first;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("maximal entanglement checks: Bell states yes, products no") {
    Bipartition cut({0}, {1}, 2);
    CHECK(is_maximally_entangled(bell_phi_plus(), cut));
    CVector amps = CVector::Zero(4);
    amps(0) = 1;
    CHECK(!is_maximally_entangled(PureState(amps, {2, 2}), cut));
    CVector rotated(4);
    rotated << 0.5, 0.5, 0.5, -0.5;  // (1 x H) Phi+
    CHECK(is_maximally_entangled(PureState(rotated, {2, 2}), cut));
}

TEST_CASE("maximal entanglement is invariant under local unitaries") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    Bipartition cut({0}, {1}, 2);
    for (int trial = 0; trial < 25; trial++) {
        CMatrix g(2, 2);
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) g(r, c) = Complex(gauss(rng), gauss(rng));
        }
        Eigen::HouseholderQR<CMatrix> qr(g);
        CMatrix u = qr.householderQ();
        PureState psi = bell_phi_plus();
        PureState moved(embed_operator(psi.dims, {trial % 2}, u) * psi.amplitudes, psi.dims);
        CHECK(is_maximally_entangled(moved, cut));
    }
}

TEST_CASE("chained measurements have the stated angle pattern and validate on the singlet") {
    CHECK_THROWS_AS(chained_measurements(1), StructuralError);
    DensityOperator rho = DensityOperator::from_pure(singlet());
    for (int n = 2; n <= 6; n++) {
        MeasurementFamily fam = chained_measurements(n);
        CHECK(fam.effects[0].size() == static_cast<size_t>(n));
        CHECK(fam.effects[1].size() == static_cast<size_t>(n));
        FltBehavior b = born_table(rho, fam);
        CHECK(validate(b, 1e-9).ok());
    }
    // N=2 reproduces the CHSH-optimal correlator magnitudes.
    FltBehavior b2 = born_table(rho, chained_measurements(2));
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            CHECK(std::abs(correlator(b2, x, y)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("born tables of random states and projective families are physical") {
    std::mt19937_64 rng(123);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 100; trial++) {
        int parties = 2 + static_cast<int>(trial % 2);
        size_t dim = size_t{1} << parties;
        CVector amps(dim);
        for (size_t k = 0; k < dim; k++) amps(static_cast<Eigen::Index>(k)) = Complex(gauss(rng), gauss(rng));
        amps.normalize();
        PureState psi(amps, std::vector<int>(parties, 2));

        MeasurementFamily fam;
        for (int p = 0; p < parties; p++) {
            std::vector<std::vector<CMatrix>> settings;
            for (int s = 0; s < 2; s++) {
                CMatrix g(2, 2);
                for (int r = 0; r < 2; r++) {
                    for (int c = 0; c < 2; c++) g(r, c) = Complex(gauss(rng), gauss(rng));
                }
                Eigen::HouseholderQR<CMatrix> qr(g);
                CMatrix u = qr.householderQ();
                CMatrix p0 = u.col(0) * u.col(0).adjoint();
                CMatrix p1 = u.col(1) * u.col(1).adjoint();
                settings.push_back({p0, p1});
            }
            fam.effects.push_back(std::move(settings));
        }
        FltBehavior b = born_table(DensityOperator::from_pure(psi), fam);
        CHECK(validate(b, 1e-9).ok());
    }
}

TEST_CASE("dense cap rejects oversized systems") {
    CHECK_THROWS_AS(PureState(CVector::Zero(size_t{1} << 13), std::vector<int>(13, 2)), CapExceededError);
}

TEST_CASE("density operators and measurement families enforce their invariants") {
    CMatrix not_hermitian(2, 2);
    not_hermitian << 1, Complex(0, 0.5), 0, 0;
    CHECK_THROWS_AS(DensityOperator(not_hermitian, {2}), DimensionError);

    CMatrix wrong_trace = CMatrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator(wrong_trace, {2}), DimensionError);

    CMatrix not_psd(2, 2);
    not_psd << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityOperator(not_psd, {2}), DimensionError);

    MeasurementFamily bad;
    CMatrix half = CMatrix::Identity(2, 2) / 2.0;
    bad.effects.push_back({{half, half / 2.0}});  // does not sum to identity
    CHECK_THROWS_AS(bad.check(), DimensionError);

    CHECK_THROWS_AS(PureState(CVector::Ones(4), {2, 2}), DimensionError);  // unnormalized
}
