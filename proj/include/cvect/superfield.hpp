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

#include <map>
#include <utility>
#include <vector>

#include "superpoly.hpp"

namespace cvect {

/// A polynomial vector field (left superderivation) on a chart, stored as
/// one coefficient polynomial per coordinate direction.
class SuperField {
public:
    SuperField() = default;
    explicit SuperField(const Chart& chart)
        : chart_(chart), coeff_(chart.n_vars(), SuperPolynomial(chart)) {}

    /// The coordinate field d/d(var).
    static SuperField direction(const Chart& chart, int var) {
        SuperField d(chart);
        d.coeff_[var] = SuperPolynomial::constant(chart, Rat(1));
        return d;
    }
    static SuperField direction(const Chart& chart, const std::string& name) {
        int v = chart.find(name);
        if (v < 0) throw DomainError("unknown variable: " + name);
        return direction(chart, v);
    }

    const Chart& chart() const { return chart_; }
    const SuperPolynomial& coefficient(int var) const { return coeff_[var]; }
    void set_coefficient(int var, SuperPolynomial p) {
        require_same_chart(chart_, p.chart());
        coeff_[var] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend SuperField operator+(const SuperField& a, const SuperField& b) {
        require_same_chart(a.chart_, b.chart_);
        SuperField r = a;
        for (int v = 0; v < r.chart_.n_vars(); ++v) r.coeff_[v] = r.coeff_[v] + b.coeff_[v];
        return r;
    }
    friend SuperField operator-(const SuperField& a, const SuperField& b) {
        require_same_chart(a.chart_, b.chart_);
        SuperField r = a;
        for (int v = 0; v < r.chart_.n_vars(); ++v) r.coeff_[v] = r.coeff_[v] - b.coeff_[v];
        return r;
    }
    friend SuperField operator-(const SuperField& a) {
        SuperField r = a;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    friend SuperField operator*(const Rat& s, const SuperField& a) {
        SuperField r = a;
        for (auto& c : r.coeff_) c = s * c;
        return r;
    }
    /// Left multiplication by a function.
    friend SuperField operator*(const SuperPolynomial& f, const SuperField& a) {
        SuperField r(a.chart_);
        for (int v = 0; v < a.chart_.n_vars(); ++v) r.coeff_[v] = f * a.coeff_[v];
        return r;
    }

    friend bool operator==(const SuperField& a, const SuperField& b) {
        return a.chart_ == b.chart_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const SuperField& a, const SuperField& b) { return !(a == b); }

private:
    Chart chart_;
    std::vector<SuperPolynomial> coeff_;
};

/// Parity of a homogeneous field: p(coefficient) + p(direction), required to
/// agree across all nonzero components.
inline bool is_parity_homogeneous(const SuperField& D) {
    bool seen = false;
    Parity p{};
    for (int v = 0; v < D.chart().n_vars(); ++v) {
        const auto& c = D.coefficient(v);
        if (c.is_zero()) continue;
        if (!is_parity_homogeneous(c)) return false;
        Parity q = parity(c) + D.chart().parity(v);
        if (!seen) { p = q; seen = true; }
        else if (q != p) return false;
    }
    return true;
}

inline Parity parity(const SuperField& D) {
    if (!is_parity_homogeneous(D)) throw MixedParity("field parity query");
    for (int v = 0; v < D.chart().n_vars(); ++v)
        if (!D.coefficient(v).is_zero())
            return parity(D.coefficient(v)) + D.chart().parity(v);
    return Parity::even;
}

/// Even/odd homogeneous parts, in that order.
inline std::pair<SuperField, SuperField> parity_components(const SuperField& D) {
    SuperField ev(D.chart()), od(D.chart());
    for (int v = 0; v < D.chart().n_vars(); ++v) {
        auto [ce, co] = parity_components(D.coefficient(v));
        if (D.chart().is_odd(v)) {
            ev.set_coefficient(v, co);
            od.set_coefficient(v, ce);
        } else {
            ev.set_coefficient(v, ce);
            od.set_coefficient(v, co);
        }
    }
    return {ev, od};
}

/// Leibniz action of the field on a polynomial.
inline SuperPolynomial apply(const SuperField& D, const SuperPolynomial& f) {
    require_same_chart(D.chart(), f.chart());
    SuperPolynomial r(f.chart());
    for (int v = 0; v < D.chart().n_vars(); ++v) {
        if (D.coefficient(v).is_zero()) continue;
        r = r + D.coefficient(v) * partial(f, v);
    }
    return r;
}

namespace detail {

/// Closed coefficient formula for homogeneous arguments.
inline SuperField commutator_homogeneous(const SuperField& a, const SuperField& b) {
    int sgn = sign_of(parity(a), parity(b));
    SuperField r(a.chart());
    for (int v = 0; v < a.chart().n_vars(); ++v) {
        SuperPolynomial c = apply(a, b.coefficient(v));
        SuperPolynomial d = apply(b, a.coefficient(v));
        r.set_coefficient(v, sgn > 0 ? c - d : c + d);
    }
    return r;
}

}  // namespace detail

/// Super commutator [a, b] = ab - (-1)^{p(a)p(b)} ba, expanded bilinearly
/// over homogeneous parts.
inline SuperField commutator(const SuperField& a, const SuperField& b) {
    require_same_chart(a.chart(), b.chart());
    auto [ae, ao] = parity_components(a);
    auto [be, bo] = parity_components(b);
    SuperField r(a.chart());
    for (const SuperField* x : {&ae, &ao})
        for (const SuperField* y : {&be, &bo}) {
            if (x->is_zero() || y->is_zero()) continue;
            r = r + detail::commutator_homogeneous(*x, *y);
        }
    return r;
}

/// Commutator recovered from the composed action on the coordinate
/// functions; independent code path kept as the brute-force oracle.
inline SuperField commutator_oracle(const SuperField& a, const SuperField& b) {
    require_same_chart(a.chart(), b.chart());
    auto [ae, ao] = parity_components(a);
    auto [be, bo] = parity_components(b);
    const Chart& chart = a.chart();
    SuperField r(chart);
    for (const SuperField* x : {&ae, &ao})
        for (const SuperField* y : {&be, &bo}) {
            if (x->is_zero() || y->is_zero()) continue;
            int sgn = sign_of(parity(*x), parity(*y));
            for (int v = 0; v < chart.n_vars(); ++v) {
                SuperPolynomial coord = SuperPolynomial::variable(chart, v);
                SuperPolynomial c = apply(*x, apply(*y, coord));
                SuperPolynomial d = apply(*y, apply(*x, coord));
                r.set_coefficient(v, r.coefficient(v) + (sgn > 0 ? c - d : c + d));
            }
        }
    return r;
}

/// Superdivergence: sum of even-direction partials of the even-direction
/// coefficients minus (-1)^{p(D)} times the odd-direction ones.
inline SuperPolynomial div(const SuperField& D) {
    if (!is_parity_homogeneous(D)) throw MixedParity("div");
    int sgn = (parity(D) == Parity::odd) ? -1 : 1;
    SuperPolynomial r(D.chart());
    for (int v = 0; v < D.chart().n_vars(); ++v) {
        SuperPolynomial t = partial(D.coefficient(v), v);
        r = D.chart().is_odd(v) ? (sgn > 0 ? r - t : r + t) : r + t;
    }
    return r;
}

/// Grading weight of the basis field m * d/d(var).
inline int field_weight(const Monomial& m, int var, const Chart& chart,
                        const std::vector<int>& weights) {
    int w = 0;
    for (int i = 0; i < chart.n_even(); ++i) w += m.even_exp[i] * weights[i];
    for (int j = 0; j < chart.n_odd(); ++j)
        if (m.odd_mask & (1u << j)) w += weights[chart.n_even() + j];
    return w - weights[var];
}

/// Split a field into weight-homogeneous components under the given weight
/// map (defaults to the chart weights).
inline std::vector<std::pair<int, SuperField>> graded_components(
    const SuperField& D, std::vector<int> weights = {}) {
    const Chart& chart = D.chart();
    if (weights.empty()) {
        weights.resize(chart.n_vars());
        for (int v = 0; v < chart.n_vars(); ++v) weights[v] = chart.weight(v);
    }
    if (int(weights.size()) != chart.n_vars())
        throw DomainError("graded_components: weight map size mismatch");
    std::map<int, SuperField> parts;
    for (int v = 0; v < chart.n_vars(); ++v) {
        for (const auto& [m, c] : D.coefficient(v).terms()) {
            int w = field_weight(m, v, chart, weights);
            auto it = parts.find(w);
            if (it == parts.end()) it = parts.emplace(w, SuperField(chart)).first;
            SuperPolynomial t(chart);
            t.add_term(m, c);
            it->second.set_coefficient(v, it->second.coefficient(v) + t);
        }
    }
    std::vector<std::pair<int, SuperField>> out;
    out.reserve(parts.size());
    for (auto& [w, f] : parts) out.emplace_back(w, std::move(f));
    return out;
}

/// The Euler field of the chart weights (weight-1 coordinates give the
/// exterior grading derivation adjoined to form the extended prolong).
inline SuperField euler_field(const Chart& chart) {
    SuperField d(chart);
    for (int v = 0; v < chart.n_vars(); ++v)
        d.set_coefficient(v, Rat(chart.weight(v)) * SuperPolynomial::variable(chart, v));
    return d;
}

}  // namespace cvect
