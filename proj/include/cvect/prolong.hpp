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

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "superfield.hpp"

namespace cvect {

/// Enumerated coordinate system for the space of weight-homogeneous fields:
/// one column per pair (coefficient monomial, direction).
class FieldBasis {
public:
    FieldBasis(const Chart& chart, int weight) : chart_(chart), weight_(weight) {
        for (int v = 0; v < chart.n_vars(); ++v)
            if (chart.weight(v) <= 0)
                throw DomainError("field basis needs positive grading weights");
        lookup_.resize(chart.n_vars());
        for (int v = 0; v < chart.n_vars(); ++v) {
            auto monos = monomials_of_weight(chart, weight + chart.weight(v));
            for (auto& m : monos) {
                lookup_[v].emplace(m, int(items_.size()));
                items_.emplace_back(std::move(m), v);
            }
        }
    }

    const Chart& chart() const { return chart_; }
    int weight() const { return weight_; }
    int size() const { return int(items_.size()); }
    const std::pair<Monomial, int>& item(int col) const { return items_[col]; }

    Parity item_parity(int col) const {
        const auto& [m, v] = items_[col];
        return m.parity() + chart_.parity(v);
    }

    /// Column indices of one parity block.
    std::vector<int> columns(Parity p) const {
        std::vector<int> out;
        for (int c = 0; c < size(); ++c)
            if (item_parity(c) == p) out.push_back(c);
        return out;
    }

    Vec to_vec(const SuperField& D) const {
        require_same_chart(chart_, D.chart());
        Vec v(size(), Rat(0));
        for (int var = 0; var < chart_.n_vars(); ++var) {
            for (const auto& [m, c] : D.coefficient(var).terms()) {
                auto it = lookup_[var].find(m);
                if (it == lookup_[var].end())
                    throw DomainError("field is not homogeneous of the basis weight");
                v[it->second] = c;
            }
        }
        return v;
    }

    SuperField from_vec(const Vec& v) const {
        SuperField D(chart_);
        for (int c = 0; c < size(); ++c) {
            if (v[c].is_zero()) continue;
            const auto& [m, var] = items_[c];
            SuperPolynomial t(chart_);
            t.add_term(m, v[c]);
            D.set_coefficient(var, D.coefficient(var) + t);
        }
        return D;
    }

    /// All monomials of the given weight, in canonical order.
    static std::vector<Monomial> monomials_of_weight(const Chart& chart, int weight) {
        std::vector<Monomial> out;
        if (weight < 0) return out;
        std::vector<std::uint8_t> exp(chart.n_even(), 0);
        auto rec = [&](auto&& self, int var, int left) -> void {
            if (var == chart.n_even()) {
                for (std::uint32_t mask = 0; mask < (1u << chart.n_odd()); ++mask) {
                    int w = 0;
                    for (int j = 0; j < chart.n_odd(); ++j)
                        if (mask & (1u << j)) w += chart.weight(chart.n_even() + j);
                    if (w == left) out.push_back(Monomial{exp, mask});
                }
                return;
            }
            int wv = chart.weight(var);
            for (int e = 0; e * wv <= left; ++e) {
                exp[var] = std::uint8_t(e);
                self(self, var + 1, left - e * wv);
            }
            exp[var] = 0;
        };
        rec(rec, 0, weight);
        std::sort(out.begin(), out.end(),
                  [](const Monomial& a, const Monomial& b) { return MonoLess{}(a, b); });
        return out;
    }

private:
    Chart chart_;
    int weight_;
    std::vector<std::pair<Monomial, int>> items_;
    std::vector<std::map<Monomial, int, MonoLess>> lookup_;
};

struct GradedComponent {
    int degree = 0;
    std::vector<SuperField> basis;
    std::pair<int, int> dims{0, 0};  // (even | odd)
};

struct ProlongationInput {
    Chart chart;
    std::vector<SuperField> g_minus1;
    std::vector<SuperField> g_0;
};

namespace detail {

/// Weight-homogeneous parity-homogeneous pieces of the input fields.
inline std::vector<SuperField> homogeneous_pieces(const std::vector<SuperField>& fields,
                                                  int weight) {
    std::vector<SuperField> out;
    for (const auto& f : fields) {
        for (const auto& [w, part] : graded_components(f)) {
            if (w != weight)
                throw DomainError("prolongation input is not weight-homogeneous");
            auto [ev, od] = parity_components(part);
            if (!ev.is_zero()) out.push_back(ev);
            if (!od.is_zero()) out.push_back(od);
        }
    }
    return out;
}

/// Echelonized component built from homogeneous spanning fields.
inline GradedComponent echelon_component(const Chart& chart, int degree,
                                         const std::vector<SuperField>& span_fields) {
    FieldBasis basis(chart, degree);
    GradedComponent comp;
    comp.degree = degree;
    for (Parity p : {Parity::even, Parity::odd}) {
        RowSpan span(basis.size());
        for (const auto& f : span_fields)
            if (!f.is_zero() && parity(f) == p) span.add(basis.to_vec(f));
        for (const auto& row : span.rows()) comp.basis.push_back(basis.from_vec(row));
        (p == Parity::even ? comp.dims.first : comp.dims.second) = span.dim();
    }
    return comp;
}

}  // namespace detail

/// One Cartan prolongation step: the weight-i fields whose bracket with
/// every generator of g_{-1} lands in the span of the previous component.
/// The membership coefficients are adjoined as extra unknowns and the
/// combined system is solved exactly; the output basis is echelonized
/// against the canonical monomial order.
inline GradedComponent prolong_step(const GradedComponent& prev,
                                    const ProlongationInput& input, int i) {
    if (i < 1) throw DomainError("prolong_step: degree must be >= 1");
    if (prev.degree != i - 1) throw DomainError("prolong_step: inconsistent input spaces");
    const Chart& chart = input.chart;
    FieldBasis big(chart, i);
    FieldBasis small(chart, i - 1);
    auto generators = detail::homogeneous_pieces(input.g_minus1, -1);

    GradedComponent out;
    out.degree = i;
    for (Parity sigma : {Parity::even, Parity::odd}) {
        auto cols = big.columns(sigma);
        // Current solution space, as fields.
        std::vector<SuperField> sol;
        sol.reserve(cols.size());
        for (int c : cols) {
            Vec unit(big.size(), Rat(0));
            unit[c] = Rat(1);
            sol.push_back(big.from_vec(unit));
        }
        for (const auto& x : generators) {
            if (sol.empty()) break;
            Parity target = sigma + parity(x);
            // Membership basis of span(prev) in the target parity block.
            Mat prev_vecs;
            for (const auto& b : prev.basis)
                if (!b.is_zero() && parity(b) == target) prev_vecs.push_back(small.to_vec(b));
            // Rows: one per coordinate of the smaller weight space.
            int n = int(sol.size()), k = int(prev_vecs.size());
            Mat sys(small.size(), Vec(n + k, Rat(0)));
            for (int j = 0; j < n; ++j) {
                Vec bracket = small.to_vec(commutator(sol[j], x));
                for (int r = 0; r < small.size(); ++r) sys[r][j] = bracket[r];
            }
            for (int j = 0; j < k; ++j)
                for (int r = 0; r < small.size(); ++r) sys[r][n + j] = -prev_vecs[j][r];
            Mat null = nullspace(std::move(sys), n + k);
            std::vector<SuperField> next;
            next.reserve(null.size());
            for (const auto& z : null) {
                SuperField f(chart);
                bool nonzero = false;
                for (int j = 0; j < n; ++j) {
                    if (z[j].is_zero()) continue;
                    f = f + z[j] * sol[j];
                    nonzero = true;
                }
                if (nonzero) next.push_back(std::move(f));
            }
            sol = std::move(next);
        }
        RowSpan span(big.size());
        for (const auto& f : sol) span.add(big.to_vec(f));
        for (const auto& row : span.rows()) out.basis.push_back(big.from_vec(row));
        (sigma == Parity::even ? out.dims.first : out.dims.second) = span.dim();
    }
    return out;
}

namespace detail {

inline void verify_closure(const Chart& chart,
                           const std::vector<GradedComponent>& comps, int max_degree) {
    // Echelon spans per degree for membership reduction.
    std::map<int, RowSpan> spans;
    std::map<int, FieldBasis> bases;
    for (const auto& c : comps) {
        bases.emplace(c.degree, FieldBasis(chart, c.degree));
        auto [it, ok] = spans.emplace(c.degree, RowSpan(bases.at(c.degree).size()));
        for (const auto& b : c.basis) it->second.add(bases.at(c.degree).to_vec(b));
    }
    for (const auto& ca : comps)
        for (const auto& cb : comps) {
            if (ca.degree > cb.degree) continue;
            int target = ca.degree + cb.degree;
            if (target < -1 || target > max_degree) continue;
            for (const auto& a : ca.basis)
                for (const auto& b : cb.basis) {
                    SuperField br = commutator(a, b);
                    if (br.is_zero()) continue;
                    if (!spans.at(target).contains(bases.at(target).to_vec(br)))
                        throw DomainError(
                            "prolongation closure violated: input g_0 is not admissible");
                }
        }
}

}  // namespace detail

/// Components for degrees -1 .. max_degree.  Inputs are rank-verified and
/// echelonized; bracket closure [g_i, g_j] in g_{i+j} is checked on every
/// computed pair of components.
inline std::vector<GradedComponent> prolong_to(const ProlongationInput& input,
                                               int max_degree, bool check_closure = true) {
    if (max_degree < 0) throw DomainError("prolong_to: max_degree must be >= 0");
    std::vector<GradedComponent> comps;
    comps.push_back(detail::echelon_component(
        input.chart, -1, detail::homogeneous_pieces(input.g_minus1, -1)));
    comps.push_back(detail::echelon_component(
        input.chart, 0, detail::homogeneous_pieces(input.g_0, 0)));
    for (int i = 1; i <= max_degree; ++i)
        comps.push_back(prolong_step(comps.back(), input, i));
    if (check_closure) detail::verify_closure(input.chart, comps, max_degree);
    return comps;
}

enum class SpanOrder { equal, left_in_right, right_in_left, incomparable };

struct SpanComparison {
    SpanOrder order;
    int dim_left = 0;
    int dim_right = 0;
    int dim_sum = 0;
};

/// Exact rank comparison of the spans of two families of fields of one
/// common weight.
inline SpanComparison subspace_compare(const std::vector<SuperField>& left,
                                       const std::vector<SuperField>& right) {
    if (left.empty() && right.empty()) return {SpanOrder::equal, 0, 0, 0};
    const Chart& chart = left.empty() ? right.front().chart() : left.front().chart();
    int weight = 0;
    bool found = false;
    for (const auto* side : {&left, &right})
        for (const auto& f : *side) {
            require_same_chart(chart, f.chart());
            for (const auto& [w, part] : graded_components(f)) {
                if (found && w != weight) throw DomainError("subspace_compare: mixed weights");
                weight = w;
                found = true;
            }
        }
    if (!found) return {SpanOrder::equal, 0, 0, 0};
    FieldBasis basis(chart, weight);
    RowSpan a(basis.size()), b(basis.size()), ab(basis.size());
    for (const auto& f : left)
        if (!f.is_zero()) { a.add(basis.to_vec(f)); ab.add(basis.to_vec(f)); }
    for (const auto& f : right)
        if (!f.is_zero()) { b.add(basis.to_vec(f)); ab.add(basis.to_vec(f)); }
    SpanComparison cmp;
    cmp.dim_left = a.dim();
    cmp.dim_right = b.dim();
    cmp.dim_sum = ab.dim();
    bool a_in_b = cmp.dim_sum == cmp.dim_right;
    bool b_in_a = cmp.dim_sum == cmp.dim_left;
    cmp.order = a_in_b && b_in_a  ? SpanOrder::equal
                : a_in_b          ? SpanOrder::left_in_right
                : b_in_a          ? SpanOrder::right_in_left
                                  : SpanOrder::incomparable;
    return cmp;
}

}  // namespace cvect
