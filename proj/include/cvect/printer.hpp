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

#include <string>
#include <vector>

#include "exceptional.hpp"
#include "superfield.hpp"

namespace cvect {

namespace detail {

inline std::string monomial_str(const Monomial& m, const Chart& chart) {
    std::string s;
    auto push = [&](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    for (int v = 0; v < chart.n_even(); ++v) {
        if (m.even_exp[v] == 0) continue;
        std::string f = chart.name(v);
        if (m.even_exp[v] > 1) f += "^" + std::to_string(m.even_exp[v]);
        push(f);
    }
    for (int j = 0; j < chart.n_odd(); ++j)
        if (m.odd_mask & (1u << j)) push(chart.name(chart.n_even() + j));
    return s;
}

struct Piece {
    bool negative;
    std::string magnitude;
};

inline std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].magnitude;
    }
    return out;
}

}  // namespace detail

/// Canonical text form: terms in descending canonical order; re-parsing
/// reproduces the identical term map.
inline std::string format(const SuperPolynomial& p) {
    std::vector<detail::Piece> pieces;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c.num() < 0;
        Rat mag = neg ? -c : c;
        std::string mono = detail::monomial_str(m, p.chart());
        std::string s;
        if (mono.empty())
            s = mag.str();
        else if (mag.is_one())
            s = mono;
        else
            s = mag.str() + "*" + mono;
        pieces.push_back({neg, std::move(s)});
    }
    return detail::join_pieces(pieces);
}

/// Field as a sum of coefficient * D<var> summands, directions in chart
/// order.
inline std::string format(const SuperField& D) {
    std::vector<detail::Piece> pieces;
    const Chart& chart = D.chart();
    for (int v = 0; v < chart.n_vars(); ++v) {
        const SuperPolynomial& c = D.coefficient(v);
        if (c.is_zero()) continue;
        std::string dtoken = "D" + chart.name(v);
        if (c.terms().size() == 1) {
            const auto& [m, coeff] = *c.terms().begin();
            bool neg = coeff.num() < 0;
            Rat mag = neg ? -coeff : coeff;
            std::string mono = detail::monomial_str(m, chart);
            std::string s;
            if (!mag.is_one()) s += mag.str() + "*";
            if (!mono.empty()) s += mono + "*";
            s += dtoken;
            pieces.push_back({neg, std::move(s)});
        } else {
            pieces.push_back({false, "(" + format(c) + ")*" + dtoken});
        }
    }
    return detail::join_pieces(pieces);
}

inline std::string format(const GluedPair& p) {
    return "(" + format(p.f) + ", " + format(p.g) + ")";
}

}  // namespace cvect
