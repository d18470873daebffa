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

#include "nonloc/boxes.hpp"

#include <numbers>

#include "nonloc/ensemble.hpp"

namespace nonloc {

RatBehavior pr_box() {
    Scenario s({2, 2}, {2, 2});
    std::vector<Rational> table(s.table_size(), Rational(0));
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    if ((a ^ b) == (x & y)) {
                        std::vector<int> xs{x, y}, as{a, b};
                        table[s.index(xs, as)] = Rational(1, 2);
                    }
                }
            }
        }
    }
    return RatBehavior(s, std::move(table));
}

MeasurementFamily chsh_measurements() {
    const double pi = std::numbers::pi;
    MeasurementFamily fam;
    fam.effects.resize(2);
    for (double theta : {0.0, pi / 2}) {
        fam.effects[0].push_back({planar_projector(theta, 0), planar_projector(theta, 1)});
    }
    for (double theta : {pi / 4, -pi / 4}) {
        fam.effects[1].push_back({planar_projector(theta, 0), planar_projector(theta, 1)});
    }
    return fam;
}

FltBehavior tsirelson_box() {
    return born_table(DensityOperator::from_pure(singlet()), chsh_measurements());
}

RatBehavior ghz_mermin_box() {
    StabilizerEnsemble e = StabilizerEnsemble::pure(ghz_tableau(3));
    PartySystem parties = PartySystem::one_qubit_per_party(3);
    std::vector<std::vector<PauliString>> settings(3);
    for (int p = 0; p < 3; p++) {
        settings[p].push_back(PauliString::single(3, p, 'X'));
        settings[p].push_back(PauliString::single(3, p, 'Y'));
    }
    return born_table_stabilizer(e, parties, settings);
}

RatBehavior svetlichny_box() {
    Scenario s({2, 2, 2}, {2, 2, 2});
    std::vector<Rational> table(s.table_size(), Rational(0));
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        std::vector<int> x = s.decode_setting(xi);
        int target = (x[0] & x[1]) ^ (x[0] & x[2]) ^ (x[1] & x[2]);
        for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
            std::vector<int> a = s.decode_outcome(ai);
            if ((a[0] ^ a[1] ^ a[2]) == target) table[xi * s.outcome_tuples() + ai] = Rational(1, 4);
        }
    }
    return RatBehavior(s, std::move(table));
}

RatBehavior pr23_uniform_box() {
    Scenario s({2, 2, 2}, {2, 2, 2});
    RatBehavior pr = pr_box();
    std::vector<Rational> table(s.table_size(), Rational(0));
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        std::vector<int> x = s.decode_setting(xi);
        for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
            std::vector<int> a = s.decode_outcome(ai);
            std::vector<int> xs{x[1], x[2]}, as{a[1], a[2]};
            table[xi * s.outcome_tuples() + ai] = Rational(1, 2) * pr.at(xs, as);
        }
    }
    return RatBehavior(s, std::move(table));
}

RatBehavior signaling_box() {
    Scenario s({2, 2}, {2, 2});
    std::vector<Rational> table(s.table_size(), Rational(0));
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            std::vector<int> xs{x, y}, as{0, x};
            table[s.index(xs, as)] = 1;
        }
    }
    return RatBehavior(s, std::move(table));
}

}  // namespace nonloc
