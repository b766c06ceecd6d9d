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

#include <catch2/catch_amalgamated.hpp>

#include "cvect/exceptional.hpp"
#include "cvect/prolong.hpp"
#include "helpers.hpp"

using namespace cvect;

TEST_CASE("toy prolongation of vect(1)") {
    Chart line({"t"}, {});
    auto t = SuperPolynomial::variable(line, "t");
    SuperField scaling(line);
    scaling.set_coefficient(0, t);

    ProlongationInput in{line, {SuperField::direction(line, 0)}, {scaling}};
    auto comps = prolong_to(in, 3);
    REQUIRE(comps.size() == 5);
    for (const auto& c : comps) {
        REQUIRE(c.dims == std::make_pair(1, 0));
        REQUIRE(int(c.basis.size()) == 1);
    }
    // Degree i is spanned by t^{i+1} d/dt.
    SuperField cubic(line);
    cubic.set_coefficient(0, t * t * t);
    REQUIRE(comps[3].basis[0] == cubic);
}

TEST_CASE("toy prolongation on a (0|1) chart stops immediately") {
    Chart point({}, {"q"});
    auto q = SuperPolynomial::variable(point, "q");
    SuperField scaling(point);
    scaling.set_coefficient(0, q);

    ProlongationInput in{point, {SuperField::direction(point, 0)}, {scaling}};
    auto comps = prolong_to(in, 2);
    REQUIRE(comps[2].dims == std::make_pair(0, 0));
    REQUIRE(comps[3].dims == std::make_pair(0, 0));
}

TEST_CASE("input dimensions of the exceptional prolongation") {
    auto comps = prolong_to(vect03_input(), 1);
    REQUIRE(comps[0].degree == -1);
    REQUIRE(comps[0].dims == std::make_pair(4, 3));
    REQUIRE(comps[1].dims == std::make_pair(12, 12));

    auto extended = prolong_to(cvect03_input(), 1);
    REQUIRE(extended[0].dims == std::make_pair(4, 3));
    REQUIRE(extended[1].dims == std::make_pair(13, 12));

    // The degree-1 witness lies in the extended prolong but not the plain one.
    FieldBasis basis(Chart::dim43(), 1);
    RowSpan plain(basis.size()), ext(basis.size());
    for (const auto& b : comps[2].basis) plain.add(basis.to_vec(b));
    for (const auto& b : extended[2].basis) ext.add(basis.to_vec(b));
    Vec witness = basis.to_vec(eta_table().F);
    REQUIRE(ext.contains(witness));
    REQUIRE_FALSE(plain.contains(witness));
}

TEST_CASE("inconsistent inputs are rejected") {
    Chart line({"t"}, {});
    auto t = SuperPolynomial::variable(line, "t");
    SuperField wrong_weight(line);
    wrong_weight.set_coefficient(0, t * t);
    ProlongationInput in{line, {SuperField::direction(line, 0)}, {wrong_weight}};
    REQUIRE_THROWS_AS(prolong_to(in, 1), DomainError);
}

TEST_CASE("subspace comparison") {
    const Chart& ch = Chart::dim43();
    auto dy = SuperField::direction(ch, "y");
    auto du1 = SuperField::direction(ch, "u1");
    auto du2 = SuperField::direction(ch, "u2");

    REQUIRE(subspace_compare({dy}, {dy}).order == SpanOrder::equal);
    auto cmp = subspace_compare({du1}, {du1, du2});
    REQUIRE(cmp.order == SpanOrder::left_in_right);
    REQUIRE(cmp.dim_left == 1);
    REQUIRE(cmp.dim_right == 2);
    REQUIRE(subspace_compare({du1}, {du2}).order == SpanOrder::incomparable);
    REQUIRE(subspace_compare({du1, du2}, {du2}).order == SpanOrder::right_in_left);
}

TEST_CASE("the degree-0 dictionary equals the i1 image in degree 0") {
    std::vector<SuperField> images;
    for (const auto& m : generating_monomials(1)) {
        if (m.deg_even() != 1) continue;
        SuperPolynomial f(Chart::dim43());
        f.add_term(m, Rat(1));
        images.push_back(i1_field(f));
    }
    REQUIRE(images.size() == 24);
    std::vector<SuperField> table;
    for (const auto& [n, f] : eta_table().g_0) table.push_back(f);
    auto cmp = subspace_compare(images, table);
    REQUIRE(cmp.order == SpanOrder::equal);
    REQUIRE(cmp.dim_left == 24);
}

namespace {

/// Solution space of the membership PDE system on the weight-d fields,
/// solved directly by exact elimination, split by parity.
std::pair<int, RowSpan> membership_solutions(int degree, Parity parity_block) {
    const Chart& ch = Chart::dim43();
    FieldBasis basis(ch, degree);
    auto cols = basis.columns(parity_block);
    Mat constraints;
    std::map<Monomial, int, MonoLess> index[7];
    // One column per basis item of this parity; rows collect every
    // monomial coefficient of every equation residual.
    std::vector<Mat> eq_rows(7);
    for (std::size_t cix = 0; cix < cols.size(); ++cix) {
        Vec unit(basis.size(), Rat(0));
        unit[cols[cix]] = Rat(1);
        auto residuals = membership_residuals(basis.from_vec(unit));
        for (int e = 0; e < 6; ++e) {
            for (std::size_t k = 0; k < residuals[e].size(); ++k) {
                for (const auto& [m, c] : residuals[e][k].terms()) {
                    auto key = m;
                    key.even_exp.push_back(std::uint8_t(k));  // tag the sub-equation
                    auto [it, fresh] = index[e].emplace(key, int(eq_rows[e].size()));
                    if (fresh) eq_rows[e].emplace_back(cols.size(), Rat(0));
                    eq_rows[e][it->second][cix] = c;
                }
            }
        }
    }
    for (int e = 0; e < 6; ++e)
        for (auto& r : eq_rows[e]) constraints.push_back(std::move(r));
    Mat kernel = nullspace(std::move(constraints), int(cols.size()));
    RowSpan span(basis.size());
    for (const auto& z : kernel) {
        Vec full(basis.size(), Rat(0));
        for (std::size_t cix = 0; cix < cols.size(); ++cix) full[cols[cix]] = z[cix];
        span.add(std::move(full));
    }
    return {int(cols.size()), std::move(span)};
}

}  // namespace

TEST_CASE("the PDE system carves out exactly the computed prolongation") {
    auto comps = prolong_to(cvect03_input(), 2);
    const Chart& ch = Chart::dim43();
    for (int degree = 0; degree <= 2; ++degree) {
        FieldBasis basis(ch, degree);
        for (Parity p : {Parity::even, Parity::odd}) {
            auto [ncols, pde_span] = membership_solutions(degree, p);
            RowSpan engine_span(basis.size());
            for (const auto& b : comps[degree + 1].basis)
                if (parity(b) == p) engine_span.add(basis.to_vec(b));
            REQUIRE(pde_span.dim() == engine_span.dim());
            for (const auto& row : engine_span.rows()) REQUIRE(pde_span.contains(row));
        }
    }
}

TEST_CASE("i1 is onto the plain prolongation, degree by degree") {
    auto comps = prolong_to(vect03_input(), 2);
    for (int degree = -1; degree <= 2; ++degree) {
        std::vector<SuperField> images;
        for (const auto& m : generating_monomials(degree + 1)) {
            if (m.deg_even() != degree + 1) continue;
            SuperPolynomial f(Chart::dim43());
            f.add_term(m, Rat(1));
            images.push_back(i1_field(f));
        }
        REQUIRE(subspace_compare(images, comps[degree + 1].basis).order ==
                SpanOrder::equal);
    }
}

TEST_CASE("engine output passes the membership system") {
    auto comps = prolong_to(cvect03_input(), 2);
    for (const auto& c : comps)
        for (const auto& b : c.basis) REQUIRE(membership(b, Variant::cvect).ok);

    auto plain = prolong_to(vect03_input(), 2);
    for (const auto& c : plain)
        for (const auto& b : c.basis) REQUIRE(membership(b, Variant::vect).ok);
}
