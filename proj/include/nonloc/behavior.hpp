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

#ifndef NONLOC_BEHAVIOR_HPP
#define NONLOC_BEHAVIOR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "nonloc/rational.hpp"
#include "nonloc/scenario.hpp"

namespace nonloc {

enum class ViolationKind { NonNegativity, Normalization, NoSignaling };

struct Violation {
    ViolationKind kind;
    int party = -1;  // offending party for no-signaling, else -1
    std::string detail;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        std::ostringstream out;
        for (const auto &v : violations) {
            switch (v.kind) {
                case ViolationKind::NonNegativity: out << "nonnegativity"; break;
                case ViolationKind::Normalization: out << "normalization"; break;
                case ViolationKind::NoSignaling: out << "no-signaling"; break;
            }
            out << ": " << v.detail << " (residual " << v.residual << ")\n";
        }
        return out.str();
    }
};

/// Probability table P(outcomes | settings) over a scenario.
///
/// Immutable after construction; the numeric mode is the scalar type
/// (Rational for exact tables, double for tables with a tolerance).
template <typename T>
class Behavior {
   public:
    Behavior(Scenario scenario, std::vector<T> table) : scenario_(std::move(scenario)), table_(std::move(table)) {
        if (table_.size() != scenario_.table_size()) {
            throw StructuralError("behavior table has " + std::to_string(table_.size()) + " entries, scenario needs " +
                                  std::to_string(scenario_.table_size()));
        }
    }

    static Behavior uniform(const Scenario &s) {
        std::vector<T> table(s.table_size(), T(1) / T(static_cast<int>(s.outcome_tuples())));
        return Behavior(s, std::move(table));
    }

    const Scenario &scenario() const { return scenario_; }
    const std::vector<T> &table() const & { return table_; }
    std::vector<T> table() && { return std::move(table_); }
    size_t size() const { return table_.size(); }

    const T &at(std::span<const int> x, std::span<const int> a) const { return table_[scenario_.index(x, a)]; }
    const T &at(size_t flat) const { return table_[flat]; }

    bool operator==(const Behavior &other) const { return scenario_ == other.scenario_ && table_ == other.table_; }

   private:
    Scenario scenario_;
    std::vector<T> table_;
};

using RatBehavior = Behavior<Rational>;
using FltBehavior = Behavior<double>;

namespace detail {

inline std::vector<int> complement_parties(const Scenario &s, std::span<const int> subset) {
    std::vector<bool> in(s.party_count(), false);
    for (int p : subset) {
        if (p < 0 || p >= s.party_count()) throw StructuralError("party index out of range");
        if (in[p]) throw StructuralError("duplicate party in subset");
        in[p] = true;
    }
    std::vector<int> comp;
    for (int p = 0; p < s.party_count(); p++) {
        if (!in[p]) comp.push_back(p);
    }
    return comp;
}

inline std::string tuple_str(std::span<const int> t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); i++) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

}  // namespace detail

/// Checks nonnegativity, per-setting normalization, and no-signaling.
///
/// No-signaling is checked at single-party granularity: for every party i and
/// every pair of its settings, the outcome distribution of the other parties
/// must agree; this implies the full condition for all subsets.
template <typename T>
ValidationReport validate(const Behavior<T> &b, T eps = T(0)) {
    using Traits = NumTraits<T>;
    if constexpr (!Traits::exact) {
        if (eps == 0.0) eps = 1e-9;
    }
    ValidationReport report;
    const Scenario &s = b.scenario();
    const size_t nx = s.setting_tuples();
    const size_t na = s.outcome_tuples();

    for (size_t xi = 0; xi < nx; xi++) {
        T sum = Traits::zero();
        for (size_t ai = 0; ai < na; ai++) {
            const T &p = b.at(xi * na + ai);
            if (!Traits::is_nonneg(p, eps)) {
                report.violations.push_back({ViolationKind::NonNegativity, -1,
                                             "P" + detail::tuple_str(s.decode_outcome(ai)) + "|" +
                                                 detail::tuple_str(s.decode_setting(xi)) + " < 0",
                                             Traits::residual(p)});
            }
            sum += p;
        }
        T dev = sum - Traits::one();
        if (!Traits::is_zero(dev, eps)) {
            report.violations.push_back({ViolationKind::Normalization, -1,
                                         "setting " + detail::tuple_str(s.decode_setting(xi)) + " sums to != 1",
                                         Traits::residual(dev)});
        }
    }

    const int m = s.party_count();
    for (int i = 0; i < m; i++) {
        const int si = s.settings()[i];
        const int oi = s.outcomes()[i];
        if (si < 2) continue;
        std::vector<int> others = detail::complement_parties(s, std::span<const int>(&i, 1));
        Scenario rest = m > 1 ? s.restrict(others) : Scenario();
        const size_t rest_x = m > 1 ? rest.setting_tuples() : 1;
        const size_t rest_a = m > 1 ? rest.outcome_tuples() : 1;
        if (m == 1) continue;  // single party: no-signaling is vacuous
        for (size_t rx = 0; rx < rest_x; rx++) {
            std::vector<int> xr = rest.decode_setting(rx);
            for (size_t ra = 0; ra < rest_a; ra++) {
                std::vector<int> ar = rest.decode_outcome(ra);
                std::vector<T> sums(si, Traits::zero());
                std::vector<int> x(m), a(m);
                for (size_t k = 0; k < others.size(); k++) {
                    x[others[k]] = xr[k];
                    a[others[k]] = ar[k];
                }
                for (int xi_own = 0; xi_own < si; xi_own++) {
                    x[i] = xi_own;
                    for (int ai_own = 0; ai_own < oi; ai_own++) {
                        a[i] = ai_own;
                        sums[xi_own] += b.at(x, a);
                    }
                }
                for (int x1 = 0; x1 < si; x1++) {
                    for (int x2 = x1 + 1; x2 < si; x2++) {
                        T dev = sums[x1] - sums[x2];
                        if (!Traits::is_zero(dev, eps)) {
                            report.violations.push_back(
                                {ViolationKind::NoSignaling, i,
                                 "marginal of parties " + detail::tuple_str(others) + " at outcomes " +
                                     detail::tuple_str(ar) + ", settings " + detail::tuple_str(xr) +
                                     " depends on party " + std::to_string(i) + " setting (" + std::to_string(x1) +
                                     " vs " + std::to_string(x2) + ")",
                                 Traits::residual(dev)});
                        }
                    }
                }
            }
        }
    }
    return report;
}

/// Marginal behavior on `subset`; requires the input to be no-signaling.
template <typename T>
Behavior<T> marginal(const Behavior<T> &b, std::span<const int> subset, T eps = T(0)) {
    const Scenario &s = b.scenario();
    ValidationReport report = validate(b, eps);
    for (const auto &v : report.violations) {
        if (v.kind == ViolationKind::NoSignaling) {
            throw SignalingError("marginal is ill-defined on signaling input: " + v.detail);
        }
    }
    std::vector<int> sub(subset.begin(), subset.end());
    std::vector<int> comp = detail::complement_parties(s, subset);
    Scenario sub_scenario = s.restrict(sub);
    Scenario comp_scenario = comp.empty() ? Scenario() : s.restrict(comp);

    const int m = s.party_count();
    std::vector<T> table(sub_scenario.table_size(), NumTraits<T>::zero());
    const size_t comp_a = comp.empty() ? 1 : comp_scenario.outcome_tuples();
    for (size_t sx = 0; sx < sub_scenario.setting_tuples(); sx++) {
        std::vector<int> xs = sub_scenario.decode_setting(sx);
        for (size_t sa = 0; sa < sub_scenario.outcome_tuples(); sa++) {
            std::vector<int> as = sub_scenario.decode_outcome(sa);
            std::vector<int> x(m, 0), a(m, 0);
            for (size_t k = 0; k < sub.size(); k++) {
                x[sub[k]] = xs[k];
                a[sub[k]] = as[k];
            }
            T total = NumTraits<T>::zero();
            for (size_t ca = 0; ca < comp_a; ca++) {
                if (!comp.empty()) {
                    std::vector<int> ac = comp_scenario.decode_outcome(ca);
                    for (size_t k = 0; k < comp.size(); k++) a[comp[k]] = ac[k];
                }
                total += b.at(x, a);  // complement settings pinned to 0
            }
            table[sx * sub_scenario.outcome_tuples() + sa] = total;
        }
    }
    return Behavior<T>(sub_scenario, std::move(table));
}

inline bool sgn_positive(const Rational &q) { return sgn(q) > 0; }
inline bool sgn_positive(double v) { return v > 0; }

/// Conditions on parties in `subset` having measured `x_sub` and seen `a_sub`;
/// returns the induced behavior of the complement.
template <typename T>
Behavior<T> condition(const Behavior<T> &b, std::span<const int> subset, std::span<const int> x_sub,
                      std::span<const int> a_sub, T eps = T(0)) {
    const Scenario &s = b.scenario();
    std::vector<int> sub(subset.begin(), subset.end());
    std::vector<int> comp = detail::complement_parties(s, subset);
    if (comp.empty()) throw StructuralError("conditioning must leave at least one party");
    if (x_sub.size() != sub.size() || a_sub.size() != sub.size()) {
        throw StructuralError("conditioning tuples must match the subset size");
    }

    Behavior<T> sub_marginal = marginal(b, subset, eps);
    const T &weight = sub_marginal.at(x_sub, a_sub);
    bool positive;
    if constexpr (NumTraits<T>::exact) {
        positive = sgn_positive(weight);
    } else {
        positive = weight > (eps > 0 ? eps : 1e-12);
    }
    if (!positive) {
        throw ZeroProbabilityError("conditioning on outcome " + detail::tuple_str(a_sub) + " at settings " +
                                   detail::tuple_str(x_sub) + " with probability zero");
    }

    Scenario comp_scenario = s.restrict(comp);
    const int m = s.party_count();
    std::vector<T> table(comp_scenario.table_size(), NumTraits<T>::zero());
    for (size_t cx = 0; cx < comp_scenario.setting_tuples(); cx++) {
        std::vector<int> xc = comp_scenario.decode_setting(cx);
        for (size_t ca = 0; ca < comp_scenario.outcome_tuples(); ca++) {
            std::vector<int> ac = comp_scenario.decode_outcome(ca);
            std::vector<int> x(m), a(m);
            for (size_t k = 0; k < sub.size(); k++) {
                x[sub[k]] = x_sub[k];
                a[sub[k]] = a_sub[k];
            }
            for (size_t k = 0; k < comp.size(); k++) {
                x[comp[k]] = xc[k];
                a[comp[k]] = ac[k];
            }
            table[cx * comp_scenario.outcome_tuples() + ca] = b.at(x, a) / weight;
        }
    }
    return Behavior<T>(comp_scenario, std::move(table));
}

/// Product behavior across two disjoint party blocks (order-preserving embed).
template <typename T>
Behavior<T> product_behavior(const Scenario &full, std::span<const int> parties_a, const Behavior<T> &ba,
                             std::span<const int> parties_b, const Behavior<T> &bb) {
    const int m = full.party_count();
    std::vector<T> table(full.table_size());
    for (size_t xi = 0; xi < full.setting_tuples(); xi++) {
        std::vector<int> x = full.decode_setting(xi);
        std::vector<int> xa(parties_a.size()), xb(parties_b.size());
        for (size_t k = 0; k < parties_a.size(); k++) xa[k] = x[parties_a[k]];
        for (size_t k = 0; k < parties_b.size(); k++) xb[k] = x[parties_b[k]];
        for (size_t ai = 0; ai < full.outcome_tuples(); ai++) {
            std::vector<int> a = full.decode_outcome(ai);
            std::vector<int> aa(parties_a.size()), ab(parties_b.size());
            for (size_t k = 0; k < parties_a.size(); k++) aa[k] = a[parties_a[k]];
            for (size_t k = 0; k < parties_b.size(); k++) ab[k] = a[parties_b[k]];
            table[xi * full.outcome_tuples() + ai] = ba.at(xa, aa) * bb.at(xb, ab);
        }
    }
    (void)m;
    return Behavior<T>(full, std::move(table));
}

/// Convex mixture of behaviors over one scenario.
template <typename T>
Behavior<T> mix(const std::vector<const Behavior<T> *> &parts, const std::vector<T> &weights) {
    if (parts.empty() || parts.size() != weights.size()) throw StructuralError("mixture needs matching parts/weights");
    std::vector<T> table(parts[0]->size(), NumTraits<T>::zero());
    for (size_t j = 0; j < parts.size(); j++) {
        if (!(parts[j]->scenario() == parts[0]->scenario())) throw StructuralError("mixture scenarios differ");
        for (size_t k = 0; k < table.size(); k++) table[k] += weights[j] * parts[j]->at(k);
    }
    return Behavior<T>(parts[0]->scenario(), std::move(table));
}

/// Relabeling helpers (used by covariance property tests).
template <typename T>
Behavior<T> permute_parties(const Behavior<T> &b, std::span<const int> perm) {
    const Scenario &s = b.scenario();
    const int m = s.party_count();
    std::vector<int> new_settings(m), new_outcomes(m);
    for (int p = 0; p < m; p++) {
        new_settings[p] = s.settings()[perm[p]];
        new_outcomes[p] = s.outcomes()[perm[p]];
    }
    Scenario ns(new_settings, new_outcomes);
    std::vector<T> table(ns.table_size());
    for (size_t xi = 0; xi < ns.setting_tuples(); xi++) {
        std::vector<int> x = ns.decode_setting(xi);
        std::vector<int> xo(m);
        for (int p = 0; p < m; p++) xo[perm[p]] = x[p];
        for (size_t ai = 0; ai < ns.outcome_tuples(); ai++) {
            std::vector<int> a = ns.decode_outcome(ai);
            std::vector<int> ao(m);
            for (int p = 0; p < m; p++) ao[perm[p]] = a[p];
            table[xi * ns.outcome_tuples() + ai] = b.at(xo, ao);
        }
    }
    return Behavior<T>(ns, std::move(table));
}

template <typename T>
Behavior<T> permute_settings(const Behavior<T> &b, int party, std::span<const int> perm) {
    const Scenario &s = b.scenario();
    std::vector<T> table(s.table_size());
    for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
        std::vector<int> x = s.decode_setting(xi);
        x[party] = perm[x[party]];
        size_t src = s.setting_index(x);
        for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
            table[xi * s.outcome_tuples() + ai] = b.at(src * s.outcome_tuples() + ai);
        }
    }
    return Behavior<T>(s, std::move(table));
}

template <typename T>
Behavior<T> permute_outcomes(const Behavior<T> &b, int party, std::span<const int> perm) {
    const Scenario &s = b.scenario();
    std::vector<T> table(s.table_size());
    for (size_t ai = 0; ai < s.outcome_tuples(); ai++) {
        std::vector<int> a = s.decode_outcome(ai);
        a[party] = perm[a[party]];
        size_t src = s.outcome_index(a);
        for (size_t xi = 0; xi < s.setting_tuples(); xi++) {
            table[xi * s.outcome_tuples() + ai] = b.at(xi * s.outcome_tuples() + src);
        }
    }
    return Behavior<T>(s, std::move(table));
}

inline FltBehavior to_float(const RatBehavior &b) {
    std::vector<double> table(b.size());
    for (size_t k = 0; k < b.size(); k++) table[k] = to_double(b.at(k));
    return FltBehavior(b.scenario(), std::move(table));
}

inline RatBehavior to_rational(const FltBehavior &b) {
    std::vector<Rational> table(b.size());
    for (size_t k = 0; k < b.size(); k++) table[k] = rational_from_double(b.at(k));
    return RatBehavior(b.scenario(), std::move(table));
}

}  // namespace nonloc

#endif
