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

#ifndef NONLOC_EPR2_HPP
#define NONLOC_EPR2_HPP

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonloc/behavior.hpp"
#include "nonloc/polytopes.hpp"
#include "nonloc/simplex.hpp"

namespace nonloc {

enum class SolveStatus { Optimal, InfeasibleInput, CapExceeded };

/// Which convex model the decomposition maximizes weight over.
struct ModelSpec {
    enum class Kind { Local, Cut, Svetlichny };
    Kind kind = Kind::Local;
    std::optional<Bipartition> cut;

    std::string describe() const {
        switch (kind) {
            case Kind::Local: return "local";
            case Kind::Cut: return "cut " + cut->describe();
            case Kind::Svetlichny: return "svetlichny";
        }
        return "?";
    }
};

/// Model vertices as LP columns, tagged with the family they belong to
/// ("local" or a bipartition label).
struct ColumnSet {
    std::vector<RatBehavior> columns;
    std::vector<std::string> family;
};

ColumnSet build_model_columns(const Scenario &s, const ModelSpec &model, const PolytopeCaps &caps);

template <typename T>
struct DecompositionResult {
    SolveStatus status = SolveStatus::Optimal;
    std::string message;
    std::string mode = NumTraits<T>::mode_name;
    ModelSpec model;
    T model_weight{};                              // total weight on model vertices
    T p_ns{};                                      // 1 - model_weight
    std::map<std::string, T> family_weights;       // per-family totals
    std::vector<std::pair<size_t, T>> primal;      // sparse (column index, weight)
    std::vector<std::string> primal_family;        // family tag per primal entry
    std::vector<T> dual;                           // Bell-type functional on table entries
    T dual_value{};                                // functional evaluated on the target
    std::optional<Behavior<T>> residual;           // normalized no-signaling remainder
    size_t pivots = 0;

    bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Maximal-weight decomposition of `b` over the given model, solved as the LP
///
///   max sum_j w_j   s.t.   sum_j w_j V_j + R = b,   w >= 0, R >= 0,
///
/// where the columns V_j are the model's extreme points. Because the target
/// and every column satisfy the no-signaling equalities and per-setting
/// normalization, the remainder R inherits them; only R >= 0 binds, so R
/// enters as the slack block of the simplex. The dual solution is a linear
/// functional y with y.V_j >= 1 on every model vertex and y.b equal to the
/// optimum, which certifies the value.
template <typename T>
DecompositionResult<T> decompose(const Behavior<T> &b, const ModelSpec &model, const PolytopeCaps &caps = {},
                                 double eps = 1e-9);

template <typename T>
DecompositionResult<T> local_fraction(const Behavior<T> &b, const PolytopeCaps &caps = {}, double eps = 1e-9) {
    return decompose(b, ModelSpec{ModelSpec::Kind::Local, std::nullopt}, caps, eps);
}

template <typename T>
DecompositionResult<T> bipartition_local_fraction(const Behavior<T> &b, const Bipartition &cut,
                                                  const PolytopeCaps &caps = {}, double eps = 1e-9) {
    return decompose(b, ModelSpec{ModelSpec::Kind::Cut, cut}, caps, eps);
}

/// Tripartite decomposition over deterministic plus all three hybrid families.
template <typename T>
DecompositionResult<T> svetlichny_decomposition(const Behavior<T> &b, const PolytopeCaps &caps = {},
                                                double eps = 1e-9) {
    if (b.scenario().party_count() != 3) throw StructuralError("svetlichny decomposition needs a 3-party behavior");
    return decompose(b, ModelSpec{ModelSpec::Kind::Svetlichny, std::nullopt}, caps, eps);
}

/// Re-derives the dual bound from scratch and checks it proves the reported
/// value: y >= 0, y.V >= 1 for every model vertex, y.b equal to the optimum.
template <typename T>
bool check_dual_certificate(const DecompositionResult<T> &r, const Behavior<T> &b, const PolytopeCaps &caps = {},
                            double eps = 1e-7);

/// Bipartition local fractions for every canonical cut, solved concurrently,
/// reported in canonical cut order.
template <typename T>
std::vector<std::pair<Bipartition, DecompositionResult<T>>> cut_scan(const Behavior<T> &b,
                                                                     const PolytopeCaps &caps = {},
                                                                     double eps = 1e-9) {
    std::vector<Bipartition> cuts = bipartitions(b.scenario().party_count());
    std::vector<std::future<DecompositionResult<T>>> jobs;
    jobs.reserve(cuts.size());
    for (const auto &cut : cuts) {
        jobs.push_back(std::async(std::launch::async,
                                  [&b, cut, caps, eps] { return bipartition_local_fraction(b, cut, caps, eps); }));
    }
    std::vector<std::pair<Bipartition, DecompositionResult<T>>> out;
    for (size_t k = 0; k < cuts.size(); k++) out.emplace_back(cuts[k], jobs[k].get());
    return out;
}

// --- implementation ---

template <typename T>
DecompositionResult<T> decompose(const Behavior<T> &b, const ModelSpec &model, const PolytopeCaps &caps, double eps) {
    DecompositionResult<T> result;
    result.model = model;

    ValidationReport report = validate(b, NumTraits<T>::exact ? T(0) : T(eps));
    if (!report.ok()) {
        result.status = SolveStatus::InfeasibleInput;
        result.message = "behavior fails validation:\n" + report.summary();
        return result;
    }

    ColumnSet cols;
    try {
        cols = build_model_columns(b.scenario(), model, caps);
    } catch (const CapExceededError &e) {
        result.status = SolveStatus::CapExceeded;
        result.message = std::string(e.what()) + "; use the theorem-1 certification path instead of the LP";
        return result;
    }

    const size_t rows = b.size();
    const size_t ncols = cols.columns.size();
    std::vector<std::vector<T>> m(rows, std::vector<T>(ncols));
    for (size_t j = 0; j < ncols; j++) {
        const auto &table = cols.columns[j].table();
        for (size_t r = 0; r < rows; r++) {
            if constexpr (NumTraits<T>::exact) {
                m[r][j] = table[r];
            } else {
                m[r][j] = to_double(table[r]);
            }
        }
    }
    std::vector<T> rhs(b.table().begin(), b.table().end());
    std::vector<T> c(ncols, NumTraits<T>::one());

    SimplexOptions<T> opt;
    opt.eps = eps;
    SimplexOutcome<T> lp = simplex_max<T>(rows, ncols, m, rhs, c, opt);
    if (lp.status != SimplexStatus::Optimal) {
        // The model weight is bounded by 1, so the LP cannot be unbounded on
        // valid input.
        throw Error("decomposition LP did not reach optimality");
    }

    result.pivots = lp.pivots;
    result.model_weight = lp.objective;
    result.p_ns = NumTraits<T>::one() - lp.objective;
    result.dual = lp.dual;
    result.dual_value = NumTraits<T>::zero();
    for (size_t r = 0; r < rows; r++) result.dual_value += lp.dual[r] * rhs[r];

    for (size_t j = 0; j < ncols; j++) {
        const T &w = lp.primal[j];
        if (!NumTraits<T>::is_zero(w, NumTraits<T>::exact ? T(0) : T(eps))) {
            result.primal.emplace_back(j, w);
            result.primal_family.push_back(cols.family[j]);
            result.family_weights[cols.family[j]] += w;
        }
    }
    if (model.kind == ModelSpec::Kind::Svetlichny) {
        // Report every family, including those with zero weight.
        result.family_weights.try_emplace("local", NumTraits<T>::zero());
        for (const auto &cut : bipartitions(3)) result.family_weights.try_emplace(cut.describe(), NumTraits<T>::zero());
    }

    bool residual_positive;
    if constexpr (NumTraits<T>::exact) {
        residual_positive = sgn_positive(result.p_ns);
    } else {
        residual_positive = result.p_ns > eps;
    }
    if (residual_positive) {
        std::vector<T> res(rows);
        for (size_t r = 0; r < rows; r++) res[r] = lp.primal[ncols + r] / result.p_ns;
        result.residual = Behavior<T>(b.scenario(), std::move(res));
    }
    return result;
}

template <typename T>
bool check_dual_certificate(const DecompositionResult<T> &r, const Behavior<T> &b, const PolytopeCaps &caps,
                            double eps) {
    if (!r.optimal()) return false;
    if (r.dual.size() != b.size()) return false;
    const T margin = NumTraits<T>::exact ? T(0) : T(eps);

    for (const T &y : r.dual) {
        if (!NumTraits<T>::is_nonneg(y, margin)) return false;
    }
    ColumnSet cols = build_model_columns(b.scenario(), r.model, caps);
    for (const auto &v : cols.columns) {
        T val = NumTraits<T>::zero();
        for (size_t k = 0; k < b.size(); k++) {
            if constexpr (NumTraits<T>::exact) {
                val += r.dual[k] * v.at(k);
            } else {
                val += r.dual[k] * to_double(v.at(k));
            }
        }
        // Model bound: the functional is >= 1 on every model vertex.
        if (!NumTraits<T>::is_nonneg(val - NumTraits<T>::one(), margin)) return false;
    }
    T on_target = NumTraits<T>::zero();
    for (size_t k = 0; k < b.size(); k++) on_target += r.dual[k] * b.at(k);
    return NumTraits<T>::is_zero(on_target - r.model_weight, margin);
}

}  // namespace nonloc

#endif
