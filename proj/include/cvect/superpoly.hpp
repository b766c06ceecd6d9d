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

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chart.hpp"
#include "rational.hpp"

namespace cvect {

/// A monomial: exponents of the even variables (chart order) plus a set of
/// odd factors stored as a bitmask.  Odd factors are implicitly in ascending
/// index order; reordering signs are absorbed into coefficients.
struct Monomial {
    std::vector<std::uint8_t> even_exp;
    std::uint32_t odd_mask = 0;

    static Monomial one(const Chart& chart) {
        return Monomial{std::vector<std::uint8_t>(chart.n_even(), 0), 0};
    }

    int deg_even() const {
        int d = 0;
        for (auto e : even_exp) d += e;
        return d;
    }
    int deg_odd() const { return std::popcount(odd_mask); }
    int deg() const { return deg_even() + deg_odd(); }
    Parity parity() const { return Parity(deg_odd() % 2); }

    int weight(const Chart& chart) const {
        int w = 0;
        for (int i = 0; i < int(even_exp.size()); ++i) w += even_exp[i] * chart.weight(i);
        for (int j = 0; j < chart.n_odd(); ++j)
            if (odd_mask & (1u << j)) w += chart.weight(chart.n_even() + j);
        return w;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.odd_mask == b.odd_mask && a.even_exp == b.even_exp;
    }
};

/// Number of transpositions needed to interleave odd factor set `b` after
/// `a` into ascending order; the product sign is (-1)^crossings.
inline int odd_crossings(std::uint32_t a, std::uint32_t b) {
    int c = 0;
    while (b) {
        int bit = std::countr_zero(b);
        c += std::popcount(a >> (bit + 1));
        b &= b - 1;
    }
    return c;
}

/// Canonical monomial order: graded, then even exponents compared
/// lexicographically (first chart variable most significant), then the odd
/// mask.  Echelon pivoting and printing both key off this order.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db;
        if (a.even_exp != b.even_exp) return a.even_exp < b.even_exp;
        return a.odd_mask < b.odd_mask;
    }
};

class SuperPolynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(const Chart& chart) : chart_(chart) {}

    static SuperPolynomial zero(const Chart& chart) { return SuperPolynomial(chart); }
    static SuperPolynomial constant(const Chart& chart, const Rat& c) {
        SuperPolynomial p(chart);
        p.add_term(Monomial::one(chart), c);
        return p;
    }
    static SuperPolynomial variable(const Chart& chart, int var) {
        Monomial m = Monomial::one(chart);
        if (chart.is_odd(var))
            m.odd_mask = 1u << chart.odd_index(var);
        else
            m.even_exp[var] = 1;
        SuperPolynomial p(chart);
        p.add_term(m, Rat(1));
        return p;
    }
    static SuperPolynomial variable(const Chart& chart, const std::string& name) {
        int v = chart.find(name);
        if (v < 0) throw DomainError("unknown variable: " + name);
        return variable(chart, v);
    }

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coefficient(Monomial::one(chart_)); }

    /// Accumulate c*m, erasing the term if the result cancels.
    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_chart(a.chart_, b.chart_);
        SuperPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_chart(a.chart_, b.chart_);
        SuperPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend SuperPolynomial operator-(const SuperPolynomial& a) {
        SuperPolynomial r(a.chart_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend SuperPolynomial operator*(const Rat& s, const SuperPolynomial& a) {
        SuperPolynomial r(a.chart_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const Rat& s) { return s * a; }

    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
        require_same_chart(a.chart_, b.chart_);
        SuperPolynomial r(a.chart_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.odd_mask & mb.odd_mask) continue;  // some xi squared
                Monomial m;
                m.even_exp.resize(ma.even_exp.size());
                for (std::size_t i = 0; i < m.even_exp.size(); ++i)
                    m.even_exp[i] = std::uint8_t(ma.even_exp[i] + mb.even_exp[i]);
                m.odd_mask = ma.odd_mask | mb.odd_mask;
                Rat c = ca * cb;
                if (odd_crossings(ma.odd_mask, mb.odd_mask) % 2) c = -c;
                r.add_term(m, c);
            }
        }
        return r;
    }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) {
        return !(a == b);
    }

private:
    Chart chart_;
    TermMap terms_;
};

/// Exact linear combination, canonical form; zero when everything cancels.
inline SuperPolynomial combine(
    const std::vector<std::pair<Rat, SuperPolynomial>>& terms) {
    if (terms.empty()) throw DomainError("combine: empty input");
    SuperPolynomial r(terms.front().second.chart());
    for (const auto& [s, p] : terms) {
        require_same_chart(r.chart(), p.chart());
        for (const auto& [m, c] : p.terms()) r.add_term(m, s * c);
    }
    return r;
}

/// Left partial derivative with respect to chart variable `var`.
/// For odd variables the factor is pulled to the front, so
/// d_v(fg) = (d_v f) g + (-1)^{p(f)} f (d_v g) and d_v^2 = 0.
inline SuperPolynomial partial(const SuperPolynomial& f, int var) {
    const Chart& chart = f.chart();
    if (var < 0 || var >= chart.n_vars()) throw DomainError("partial: unknown variable");
    SuperPolynomial r(chart);
    if (!chart.is_odd(var)) {
        for (const auto& [m, c] : f.terms()) {
            if (m.even_exp[var] == 0) continue;
            Monomial d = m;
            d.even_exp[var] -= 1;
            r.add_term(d, c * Rat(m.even_exp[var]));
        }
    } else {
        std::uint32_t bit = 1u << chart.odd_index(var);
        for (const auto& [m, c] : f.terms()) {
            if (!(m.odd_mask & bit)) continue;
            Monomial d = m;
            d.odd_mask &= ~bit;
            int before = std::popcount(m.odd_mask & (bit - 1));
            r.add_term(d, (before % 2) ? -c : c);
        }
    }
    return r;
}

inline SuperPolynomial partial(const SuperPolynomial& f, const std::string& name) {
    int v = f.chart().find(name);
    if (v < 0) throw DomainError("partial: unknown variable " + name);
    return partial(f, v);
}

inline bool is_parity_homogeneous(const SuperPolynomial& f) {
    bool seen = false;
    Parity p{};
    for (const auto& [m, c] : f.terms()) {
        if (!seen) { p = m.parity(); seen = true; }
        else if (m.parity() != p) return false;
    }
    return true;
}

/// Parity in C[x] (count of odd factors).  Zero counts as even.
inline Parity parity(const SuperPolynomial& f) {
    if (!is_parity_homogeneous(f)) throw MixedParity("parity query");
    return f.is_zero() ? Parity::even : f.terms().begin()->first.parity();
}

struct BiDegree {
    Parity parity;
    int deg_even;
    int deg_odd;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

inline bool is_bihomogeneous(const SuperPolynomial& f) {
    bool seen = false;
    int du = 0, dx = 0;
    for (const auto& [m, c] : f.terms()) {
        if (!seen) { du = m.deg_even(); dx = m.deg_odd(); seen = true; }
        else if (m.deg_even() != du || m.deg_odd() != dx) return false;
    }
    return true;
}

/// Bidegree (and parity) of a bihomogeneous polynomial.
inline BiDegree bidegree(const SuperPolynomial& f) {
    if (!is_bihomogeneous(f)) throw MixedParity("bidegree of a non-bihomogeneous polynomial");
    if (f.is_zero()) return {Parity::even, 0, 0};
    const Monomial& m = f.terms().begin()->first;
    return {m.parity(), m.deg_even(), m.deg_odd()};
}

/// Split into bihomogeneous components, ordered by (deg_even, deg_odd).
inline std::vector<SuperPolynomial> bihomogeneous_components(const SuperPolynomial& f) {
    std::map<std::pair<int, int>, SuperPolynomial> parts;
    for (const auto& [m, c] : f.terms()) {
        auto key = std::make_pair(m.deg_even(), m.deg_odd());
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, SuperPolynomial(f.chart())).first;
        it->second.add_term(m, c);
    }
    std::vector<SuperPolynomial> out;
    out.reserve(parts.size());
    for (auto& [k, p] : parts) out.push_back(std::move(p));
    return out;
}

/// Even/odd parts, in that order.
inline std::pair<SuperPolynomial, SuperPolynomial> parity_components(const SuperPolynomial& f) {
    SuperPolynomial ev(f.chart()), od(f.chart());
    for (const auto& [m, c] : f.terms())
        (m.parity() == Parity::even ? ev : od).add_term(m, c);
    return {ev, od};
}

/// Part of f with odd degree exactly k.
inline SuperPolynomial odd_degree_part(const SuperPolynomial& f, int k) {
    SuperPolynomial r(f.chart());
    for (const auto& [m, c] : f.terms())
        if (m.deg_odd() == k) r.add_term(m, c);
    return r;
}

inline SuperPolynomial drop_constant(const SuperPolynomial& f) {
    SuperPolynomial r = f;
    r.add_term(Monomial::one(f.chart()), -f.constant_term());
    return r;
}

}  // namespace cvect
