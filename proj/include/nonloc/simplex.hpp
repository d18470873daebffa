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

#ifndef NONLOC_SIMPLEX_HPP
#define NONLOC_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "nonloc/errors.hpp"
#include "nonloc/rational.hpp"

namespace nonloc {

template <typename T>
struct SimplexOptions {
    double eps = 1e-9;          // feasibility/pricing tolerance (float mode only)
    size_t max_pivots = 500000;
    size_t stall_window = 256;  // float mode: switch to Bland after this many non-improving pivots
};

enum class SimplexStatus { Optimal, Unbounded, PivotLimit };

template <typename T>
struct SimplexOutcome {
    SimplexStatus status = SimplexStatus::PivotLimit;
    T objective{};
    std::vector<T> primal;  // length model_cols + rows (slacks last)
    std::vector<T> dual;    // one multiplier per row
    size_t pivots = 0;
};

/// Solves  max c.w  s.t.  M w + r = b,  w >= 0, r >= 0  with b >= 0.
///
/// The slack basis is feasible from the start, so no phase-1 is needed.
/// Rational instantiation pivots by Bland's rule throughout (guaranteed
/// termination); double instantiation prices the most positive reduced cost
/// and falls back to Bland when the objective stalls.
template <typename T>
SimplexOutcome<T> simplex_max(size_t rows, size_t model_cols, const std::vector<std::vector<T>> &m,
                              const std::vector<T> &b, const std::vector<T> &c, const SimplexOptions<T> &opt = {}) {
    constexpr bool exact = NumTraits<T>::exact;
    const size_t cols = model_cols + rows;
    const T zero = NumTraits<T>::zero();
    const T tol = [&] {
        if constexpr (exact) {
            return T(0);
        } else {
            return T(opt.eps);
        }
    }();

    // Tableau rows: [model columns | slack identity | rhs].
    std::vector<std::vector<T>> tab(rows, std::vector<T>(cols + 1, zero));
    for (size_t r = 0; r < rows; r++) {
        for (size_t j = 0; j < model_cols; j++) tab[r][j] = m[r][j];
        tab[r][model_cols + r] = NumTraits<T>::one();
        tab[r][cols] = b[r];
    }
    // Reduced objective row: obj[j] = c_j - z_j; positive entries improve.
    std::vector<T> obj(cols + 1, zero);
    for (size_t j = 0; j < model_cols; j++) obj[j] = c[j];

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; r++) basis[r] = model_cols + r;

    SimplexOutcome<T> out;
    size_t stall = 0;
    bool bland = exact;
    T last_objective = zero;

    for (out.pivots = 0; out.pivots < opt.max_pivots; out.pivots++) {
        // Entering column.
        size_t enter = cols;
        if (bland) {
            for (size_t j = 0; j < cols; j++) {
                if (obj[j] > tol) {
                    enter = j;
                    break;
                }
            }
        } else {
            T best = tol;
            for (size_t j = 0; j < cols; j++) {
                if (obj[j] > best) {
                    best = obj[j];
                    enter = j;
                }
            }
        }
        if (enter == cols) {
            out.status = SimplexStatus::Optimal;
            break;
        }

        // Ratio test; ties resolved toward the smallest basic index.
        size_t leave = rows;
        T best_ratio = zero;
        for (size_t r = 0; r < rows; r++) {
            if (tab[r][enter] > tol) {
                T ratio = tab[r][cols] / tab[r][enter];
                if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == rows) {
            out.status = SimplexStatus::Unbounded;
            break;
        }

        // Pivot on (leave, enter).
        T inv = NumTraits<T>::one() / tab[leave][enter];
        for (size_t c2 = 0; c2 <= cols; c2++) tab[leave][c2] *= inv;
        tab[leave][enter] = NumTraits<T>::one();
        for (size_t r = 0; r < rows; r++) {
            if (r == leave) continue;
            T f = tab[r][enter];
            if (NumTraits<T>::is_zero(f, zero)) continue;
            for (size_t c2 = 0; c2 <= cols; c2++) {
                if (!NumTraits<T>::is_zero(tab[leave][c2], zero)) tab[r][c2] -= f * tab[leave][c2];
            }
            tab[r][enter] = zero;
        }
        {
            T f = obj[enter];
            if (!NumTraits<T>::is_zero(f, zero)) {
                for (size_t c2 = 0; c2 <= cols; c2++) {
                    if (!NumTraits<T>::is_zero(tab[leave][c2], zero)) obj[c2] -= f * tab[leave][c2];
                }
                obj[enter] = zero;
            }
        }
        basis[leave] = enter;

        if constexpr (!exact) {
            T current = -obj[cols];
            if (current > last_objective + tol) {
                last_objective = current;
                stall = 0;
            } else if (++stall > opt.stall_window) {
                bland = true;
            }
        }
    }
    if (out.pivots >= opt.max_pivots) throw Error("simplex exceeded the pivot limit");

    out.primal.assign(cols, zero);
    for (size_t r = 0; r < rows; r++) out.primal[basis[r]] = tab[r][cols];
    out.objective = -obj[cols];
    out.dual.assign(rows, zero);
    for (size_t r = 0; r < rows; r++) out.dual[r] = -obj[model_cols + r];
    return out;
}

}  // namespace nonloc

#endif
