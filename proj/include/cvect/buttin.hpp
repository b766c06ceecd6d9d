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

#include <utility>

#include "superfield.hpp"

namespace cvect {

// Generating-function calculus for le(3).  The chart pairs its i-th even
// variable with its i-th odd variable; surplus even variables (y on the
// (4|3) chart) are treated as parameters.

inline int pair_count(const Chart& chart) {
    if (chart.n_odd() > chart.n_even())
        throw DomainError("chart has more odd than even variables");
    return chart.n_odd();
}

/// Phi = sum u_i x_i over the paired coordinates.
inline SuperPolynomial phi_polynomial(const Chart& chart) {
    SuperPolynomial p(chart);
    for (int i = 0; i < pair_count(chart); ++i)
        p = p + SuperPolynomial::variable(chart, i) *
                    SuperPolynomial::variable(chart, chart.n_even() + i);
    return p;
}

/// The Leitesian field of a generating function,
/// Le_f = sum_i (df/du_i d/dx_i + (-1)^{p(f)} df/dx_i d/du_i).
inline SuperField le_field(const SuperPolynomial& f) {
    if (!is_parity_homogeneous(f)) throw MixedParity("le_field");
    const Chart& chart = f.chart();
    int n = pair_count(chart);
    int sgn = (f.is_zero() || parity(f) == Parity::even) ? 1 : -1;
    SuperField D(chart);
    for (int i = 0; i < n; ++i) {
        D.set_coefficient(chart.n_even() + i, partial(f, i));
        SuperPolynomial t = partial(f, chart.n_even() + i);
        D.set_coefficient(i, sgn > 0 ? t : -t);
    }
    return D;
}

/// Buttin bracket sum with the constant term kept.
inline SuperPolynomial buttin_bracket_raw(const SuperPolynomial& f,
                                          const SuperPolynomial& g) {
    require_same_chart(f.chart(), g.chart());
    if (!is_parity_homogeneous(f) || !is_parity_homogeneous(g))
        throw MixedParity("buttin_bracket");
    const Chart& chart = f.chart();
    int n = pair_count(chart);
    int sgn = (f.is_zero() || parity(f) == Parity::even) ? 1 : -1;
    SuperPolynomial r(chart);
    for (int i = 0; i < n; ++i) {
        r = r + partial(f, i) * partial(g, chart.n_even() + i);
        SuperPolynomial t = partial(f, chart.n_even() + i) * partial(g, i);
        r = sgn > 0 ? r + t : r - t;
    }
    return r;
}

/// Buttin bracket, the generating-function transport of the commutator:
/// Le_{{f,g}} = [Le_f, Le_g].  The constant term is dropped.
inline SuperPolynomial buttin_bracket(const SuperPolynomial& f, const SuperPolynomial& g) {
    return drop_constant(buttin_bracket_raw(f, g));
}

/// The odd Laplacian sum_i d^2/du_i dx_i, constants kept (raw value).
inline SuperPolynomial delta(const SuperPolynomial& f) {
    const Chart& chart = f.chart();
    int n = pair_count(chart);
    SuperPolynomial r(chart);
    for (int i = 0; i < n; ++i) r = r + partial(partial(f, chart.n_even() + i), i);
    return r;
}

/// nu(f) = n + deg_u f - deg_x f for bihomogeneous f.
inline int nu(const SuperPolynomial& f) {
    BiDegree d = bidegree(f);
    return pair_count(f.chart()) + d.deg_even - d.deg_odd;
}

/// Right inverse of delta on harmonic input, bidegree by bidegree:
/// delta_inv(f) = (1/nu) Phi f.  Errors when nu = 0 on a component or when
/// a component is not harmonic.
inline SuperPolynomial delta_inv(const SuperPolynomial& f) {
    const Chart& chart = f.chart();
    SuperPolynomial phi = phi_polynomial(chart);
    SuperPolynomial r(chart);
    for (const auto& comp : bihomogeneous_components(f)) {
        if (!delta(comp).is_zero())
            throw DomainError("delta_inv: component is not harmonic");
        int n = nu(comp);
        if (n == 0) throw DomainError("delta_inv: nu = 0 on a component");
        r = r + Rat(1, n) * (phi * comp);
    }
    return r;
}

/// Triple odd derivative d^3/dx1 dx2 dx3, composed right to left (the x3
/// derivative is applied first).
inline SuperPolynomial d3xi(const SuperPolynomial& f) {
    const Chart& chart = f.chart();
    if (chart.n_odd() != 3) throw DomainError("d3xi needs exactly three odd variables");
    int e = chart.n_even();
    return partial(partial(partial(f, e + 2), e + 1), e);
}

enum class SleClass { general, sle, sle_degree };

/// A generating function is special (sle) when harmonic; it lies in the
/// codimension-1 ideal sle° when additionally the triple odd derivative
/// vanishes.
inline SleClass sle_classify(const SuperPolynomial& f) {
    if (!delta(f).is_zero()) return SleClass::general;
    return d3xi(f).is_zero() ? SleClass::sle_degree : SleClass::sle;
}

}  // namespace cvect
