/*
   Copyright 2026 the cvect authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace cvect {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size(), Vec(cols, Rat(0)));
    return pivots;
}

inline int rank(Mat m) { return int(rref(m).size()); }

/// Basis of {x : A x = 0}, one vector per free column, reduced form.
inline Mat nullspace(Mat a, int cols) {
    auto pivots = rref(a);
    std::vector<int> pivot_of_col(cols, -1);
    for (int i = 0; i < int(pivots.size()); ++i) pivot_of_col[pivots[i]] = i;
    Mat basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols, Rat(0));
        v[c] = Rat(1);
        for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A growing row space kept in reduced echelon form.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int dim() const { return int(rows_.size()); }
    const Mat& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the current rows.
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& f = v[pivots_[i]];
            if (f.is_zero()) continue;
            Rat c = f;
            for (int j = 0; j < cols_; ++j) v[j] -= c * rows_[i][j];
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    /// Insert v; returns false when v was already in the span.
    bool add(Vec v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead < 0) return false;
        Rat inv = Rat(1) / v[lead];
        for (int j = lead; j < cols_; ++j) v[j] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rat f = rows_[i][lead];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols_; ++j) rows_[i][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

private:
    int cols_;
    Mat rows_;
    std::vector<int> pivots_;
};

/// One solution of A x = b, or nothing when inconsistent.  Free variables
/// are set to zero after echelon pivoting, so the answer is deterministic.
inline std::optional<Vec> solve(Mat a, const Vec& b) {
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = rref(a);
    Vec x(cols, Rat(0));
    for (int i = 0; i < int(pivots.size()); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // pivot in the rhs column
        x[pivots[i]] = a[i][cols];
    }
    return x;
}

}  // namespace cvect
