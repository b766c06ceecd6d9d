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

#include <random>
#include <vector>

#include "cvect/exceptional.hpp"
#include "cvect/superfield.hpp"
#include "cvect/superpoly.hpp"

namespace cvect {

inline std::mt19937_64 test_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Rat random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    int v = d(rng);
    return Rat(v == 0 ? 1 : v);
}

/// All monomials of the chart with even degree <= max_even (per variable
/// capped at max_even) and any odd subset.
inline std::vector<Monomial> monomials_up_to(const Chart& chart, int max_even) {
    std::vector<Monomial> out;
    std::vector<std::uint8_t> exp(chart.n_even(), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == chart.n_even()) {
            for (std::uint32_t mask = 0; mask < (1u << chart.n_odd()); ++mask)
                out.push_back(Monomial{exp, mask});
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exp[var] = std::uint8_t(e);
            self(self, var + 1, left - e);
        }
        exp[var] = 0;
    };
    rec(rec, 0, max_even);
    return out;
}

/// All monomials of exact bidegree (deg_even, deg_odd).
inline std::vector<Monomial> monomials_of_bidegree(const Chart& chart, int deg_even,
                                                   int deg_odd) {
    std::vector<Monomial> out;
    for (auto& m : monomials_up_to(chart, deg_even))
        if (m.deg_even() == deg_even && m.deg_odd() == deg_odd) out.push_back(m);
    return out;
}

inline SuperPolynomial random_poly(const Chart& chart, int max_even,
                                   std::mt19937_64& rng, int terms = 4) {
    auto monos = monomials_up_to(chart, max_even);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    SuperPolynomial p(chart);
    for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_coeff(rng));
    return p;
}

inline SuperPolynomial random_parity_homogeneous_poly(const Chart& chart, int max_even,
                                                      std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<int> par(0, 1);
    Parity want = Parity(par(rng));
    auto monos = monomials_up_to(chart, max_even);
    std::erase_if(monos, [&](const Monomial& m) { return m.parity() != want; });
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    SuperPolynomial p(chart);
    for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_coeff(rng));
    return p;
}

/// Nonzero random bihomogeneous polynomial of the exact bidegree.
inline SuperPolynomial random_bihomogeneous_poly(const Chart& chart, int deg_even,
                                                 int deg_odd, std::mt19937_64& rng,
                                                 int terms = 3) {
    auto monos = monomials_of_bidegree(chart, deg_even, deg_odd);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    SuperPolynomial p(chart);
    while (p.is_zero())
        for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_coeff(rng));
    return p;
}

/// Monomials on the (4|3) chart without y and without the constant,
/// deg_u <= max_even, any odd part: the generating-function monomials.
inline std::vector<Monomial> generating_monomials(int max_even) {
    auto monos = monomials_up_to(Chart::dim43(), max_even);
    std::erase_if(monos, [](const Monomial& m) {
        return m.even_exp[3] != 0 || m.deg() == 0;
    });
    return monos;
}

/// Random nonzero bihomogeneous generating function on the (4|3) chart.
inline SuperPolynomial random_generating_poly(int deg_u, int deg_x, std::mt19937_64& rng,
                                              int terms = 3) {
    const Chart& chart = Chart::dim43();
    auto monos = monomials_of_bidegree(chart, deg_u, deg_x);
    std::erase_if(monos, [](const Monomial& m) { return m.even_exp[3] != 0; });
    if (monos.empty()) return SuperPolynomial(chart);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    SuperPolynomial p(chart);
    while (p.is_zero())
        for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_coeff(rng));
    return p;
}

inline GluedPair random_glued_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> du(0, 2), dx(0, 3), parts(1, 2);
    SuperPolynomial f(Chart::dim43()), g(Chart::dim43());
    for (int t = parts(rng); t-- > 0;) f = f + random_generating_poly(du(rng), dx(rng), rng);
    for (int t = parts(rng); t-- > 0;) g = g + random_generating_poly(du(rng), dx(rng), rng);
    return GluedPair(f, g);
}

/// Pair whose realized field is parity-homogeneous: both slots share one
/// function parity.
inline GluedPair random_homogeneous_glued_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> du(0, 2), dx01(0, 1), coin(0, 1);
    Parity want = Parity(coin(rng));
    auto slot = [&](std::mt19937_64& r) {
        int d = dx01(r) * 2 + int(want);  // odd degree with the wanted parity
        return random_generating_poly(du(r), d, r);
    };
    return GluedPair(slot(rng), slot(rng));
}

/// Basis of the bidegree-(deg_u, deg_x) slice of sle°(3): kernel of the
/// odd Laplacian and of the triple odd derivative, by exact elimination.
inline std::vector<SuperPolynomial> sle_basis(int deg_u, int deg_x) {
    const Chart& chart = Chart::dim43();
    auto monos = monomials_of_bidegree(chart, deg_u, deg_x);
    std::erase_if(monos,
                  [](const Monomial& m) { return m.even_exp[3] != 0 || m.deg() == 0; });
    int n = int(monos.size());
    Mat constraints;
    auto add_rows = [&](auto&& op) {
        std::map<Monomial, int, MonoLess> index;
        std::size_t base = constraints.size();
        for (int c = 0; c < n; ++c) {
            SuperPolynomial m(chart);
            m.add_term(monos[c], Rat(1));
            SuperPolynomial image = op(m);
            for (const auto& [mm, cc] : image.terms()) {
                auto [it, fresh] = index.emplace(mm, int(index.size()));
                if (fresh) constraints.emplace_back(n, Rat(0));
                constraints[base + it->second][c] = cc;
            }
        }
    };
    add_rows([](const SuperPolynomial& m) { return delta(m); });
    add_rows([](const SuperPolynomial& m) { return d3xi(m); });
    std::vector<SuperPolynomial> basis;
    for (const auto& v : nullspace(std::move(constraints), n)) {
        SuperPolynomial p(chart);
        for (int c = 0; c < n; ++c) p.add_term(monos[c], v[c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

inline SuperField random_homogeneous_field(const Chart& chart, int max_even,
                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<int> par(0, 1);
    Parity want = Parity(par(rng));
    SuperField D(chart);
    for (int v = 0; v < chart.n_vars(); ++v) {
        Parity coeff_parity = want + chart.parity(v);
        auto monos = monomials_up_to(chart, max_even);
        std::erase_if(monos, [&](const Monomial& m) { return m.parity() != coeff_parity; });
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        SuperPolynomial p(chart);
        for (int t = 0; t < 2; ++t) p.add_term(monos[pick(rng)], random_coeff(rng));
        D.set_coefficient(v, p);
    }
    return D;
}

}  // namespace cvect
