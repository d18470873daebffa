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

#include "nonloc/linalg.hpp"

namespace nonloc {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(RatMatrix &m) {
    std::vector<size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); col++) {
        size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) pivot++;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = 1 / m[row][col];
        for (size_t c = col; c < cols; c++) m[row][c] *= inv;
        for (size_t r = 0; r < m.size(); r++) {
            if (r != row && sgn(m[r][col]) != 0) {
                Rational f = m[r][col];
                for (size_t c = col; c < cols; c++) m[r][c] -= f * m[row][c];
            }
        }
        pivot_cols.push_back(col);
        row++;
    }
    return pivot_cols;
}

}  // namespace

size_t rat_rank(RatMatrix rows) {
    return rref(rows).size();
}

RatMatrix rat_null_space(const RatMatrix &a) {
    if (a.empty()) return {};
    RatMatrix m = a;
    const size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    RatMatrix basis;
    for (size_t free_col = 0; free_col < cols; free_col++) {
        if (is_pivot[free_col]) continue;
        RatVector v(cols, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            v[pivots[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> rat_solve(RatMatrix a, RatVector b) {
    if (a.empty()) return RatVector{};
    const size_t cols = a[0].size();
    for (size_t r = 0; r < a.size(); r++) a[r].push_back(b[r]);
    std::vector<size_t> pivots = rref(a);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVector x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = a[r][cols];
    return x;
}

}  // namespace nonloc
