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

#include <cctype>
#include <string>
#include <utility>

#include "superfield.hpp"

namespace cvect {

// Expression grammar over a chart: rational coefficients (-2/5), variables,
// +, -, *, ^ and parentheses; odd variables admit exponent 1 only.  Field
// literals additionally use direction tokens D<var> (Du1, Dx2, Dy), exactly
// one per product term; parenthesized groups stay polynomial.

namespace detail {

class Tokenizer {
public:
    explicit Tokenizer(const std::string& text) : text_(text) { advance(); }

    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };

    Kind kind() const { return kind_; }
    const std::string& ident() const { return ident_; }
    Rat number() const { return number_; }
    std::size_t pos() const { return token_pos_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        token_pos_ = pos_;
        if (pos_ >= text_.size()) { kind_ = Kind::end; return; }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = read_integer();
            std::int64_t den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t save = pos_++;
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    den = read_integer();
                else
                    pos_ = save;
            }
            number_ = Rat(num, den);
            kind_ = Kind::number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            ident_ = text_.substr(start, pos_ - start);
            kind_ = Kind::ident;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': kind_ = Kind::plus; return;
            case '-': kind_ = Kind::minus; return;
            case '*': kind_ = Kind::star; return;
            case '^': kind_ = Kind::caret; return;
            case '(': kind_ = Kind::lparen; return;
            case ')': kind_ = Kind::rparen; return;
            default:
                throw ParseError(token_pos_, std::string("unexpected character '") + c + "'");
        }
    }

private:
    std::int64_t read_integer() {
        std::int64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v < 0) throw ParseError(start, "integer literal too large");
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t token_pos_ = 0;
    Kind kind_ = Kind::end;
    std::string ident_;
    Rat number_;
};

class ExprParser {
public:
    ExprParser(const std::string& text, const Chart& chart, bool field_mode)
        : tok_(text), chart_(chart), field_mode_(field_mode) {}

    SuperPolynomial run_poly() {
        SuperPolynomial p = parse_poly_expression();
        expect_end();
        return p;
    }

    SuperField run_field() {
        SuperField acc(chart_);
        Rat sign = leading_sign();
        accumulate(acc, sign);
        while (tok_.kind() == Tokenizer::Kind::plus || tok_.kind() == Tokenizer::Kind::minus) {
            Rat s = tok_.kind() == Tokenizer::Kind::minus ? Rat(-1) : Rat(1);
            tok_.advance();
            accumulate(acc, s);
        }
        expect_end();
        return acc;
    }

private:
    struct Term {
        SuperPolynomial poly;
        int direction = -1;
    };

    Rat leading_sign() {
        if (tok_.kind() == Tokenizer::Kind::plus || tok_.kind() == Tokenizer::Kind::minus) {
            Rat s = tok_.kind() == Tokenizer::Kind::minus ? Rat(-1) : Rat(1);
            tok_.advance();
            return s;
        }
        return Rat(1);
    }

    void accumulate(SuperField& acc, const Rat& sign) {
        std::size_t at = tok_.pos();
        Term t = parse_term();
        if (t.direction < 0)
            throw ParseError(at, "field term needs exactly one direction token");
        acc.set_coefficient(t.direction, acc.coefficient(t.direction) + sign * t.poly);
    }

    SuperPolynomial parse_poly_expression() {
        Rat sign = leading_sign();
        std::size_t at = tok_.pos();
        Term t = parse_term();
        if (t.direction >= 0) throw ParseError(at, "direction token in a polynomial");
        SuperPolynomial acc = sign * t.poly;
        while (tok_.kind() == Tokenizer::Kind::plus || tok_.kind() == Tokenizer::Kind::minus) {
            Rat s = tok_.kind() == Tokenizer::Kind::minus ? Rat(-1) : Rat(1);
            tok_.advance();
            at = tok_.pos();
            t = parse_term();
            if (t.direction >= 0) throw ParseError(at, "direction token in a polynomial");
            acc = acc + s * t.poly;
        }
        return acc;
    }

    Term parse_term() {
        Term t{SuperPolynomial::constant(chart_, Rat(1)), -1};
        parse_factor(t);
        while (tok_.kind() == Tokenizer::Kind::star) {
            tok_.advance();
            parse_factor(t);
        }
        return t;
    }

    void parse_factor(Term& t) {
        std::size_t at = tok_.pos();
        SuperPolynomial base(chart_);
        bool have_base = false;
        switch (tok_.kind()) {
            case Tokenizer::Kind::number:
                base = SuperPolynomial::constant(chart_, tok_.number());
                have_base = true;
                tok_.advance();
                break;
            case Tokenizer::Kind::ident: {
                const std::string& name = tok_.ident();
                int var = chart_.find(name);
                if (var >= 0) {
                    base = SuperPolynomial::variable(chart_, var);
                    have_base = true;
                } else if (field_mode_ && name.size() > 1 && name[0] == 'D' &&
                           chart_.find(name.substr(1)) >= 0) {
                    if (t.direction >= 0)
                        throw ParseError(at, "more than one direction token in a term");
                    t.direction = chart_.find(name.substr(1));
                } else {
                    throw ParseError(at, "unknown variable '" + name + "'");
                }
                tok_.advance();
                break;
            }
            case Tokenizer::Kind::lparen: {
                tok_.advance();
                base = parse_poly_expression();
                have_base = true;
                if (tok_.kind() != Tokenizer::Kind::rparen)
                    throw ParseError(tok_.pos(), "expected ')'");
                tok_.advance();
                break;
            }
            default:
                throw ParseError(at, "expected a number, variable or '('");
        }
        if (tok_.kind() == Tokenizer::Kind::caret) {
            std::size_t eat = tok_.pos();
            tok_.advance();
            if (tok_.kind() != Tokenizer::Kind::number || tok_.number().den() != 1)
                throw ParseError(tok_.pos(), "expected an integer exponent");
            std::int64_t e = tok_.number().num();
            tok_.advance();
            if (!have_base) throw ParseError(eat, "direction tokens admit no exponent");
            if (is_single_odd(base) && e != 1)
                throw ParseError(eat, "odd variables admit exponent 1 only");
            if (e > 32) throw ParseError(eat, "exponent too large");
            SuperPolynomial p = SuperPolynomial::constant(chart_, Rat(1));
            for (std::int64_t k = 0; k < e; ++k) p = p * base;
            base = p;
        }
        if (have_base) t.poly = t.poly * base;
    }

    bool is_single_odd(const SuperPolynomial& p) const {
        if (p.terms().size() != 1) return false;
        const Monomial& m = p.terms().begin()->first;
        return m.deg_even() == 0 && m.deg_odd() == 1;
    }

    void expect_end() {
        if (tok_.kind() != Tokenizer::Kind::end) throw ParseError(tok_.pos(), "trailing input");
    }

    Tokenizer tok_;
    const Chart& chart_;
    bool field_mode_;
};

}  // namespace detail

/// Polynomial from text; canonical form, odd reordering signs applied.
inline SuperPolynomial parse_poly(const std::string& text, const Chart& chart) {
    return detail::ExprParser(text, chart, false).run_poly();
}

/// Field from text: a sum of products, each carrying one D<var> token.
inline SuperField parse_field(const std::string& text, const Chart& chart) {
    return detail::ExprParser(text, chart, true).run_field();
}

/// "(f, g)" pair literal of two polynomial expressions.
inline std::pair<SuperPolynomial, SuperPolynomial> parse_pair(const std::string& text,
                                                              const Chart& chart) {
    std::size_t open = text.find('(');
    std::size_t close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close <= open)
        throw ParseError(0, "expected a pair literal (f, g)");
    std::string inner = text.substr(open + 1, close - open - 1);
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') ++depth;
        if (inner[i] == ')') --depth;
        if (inner[i] == ',' && depth == 0) { cut = i; break; }
    }
    if (cut == std::string::npos) throw ParseError(open + 1, "expected ',' in pair literal");
    return {parse_poly(inner.substr(0, cut), chart),
            parse_poly(inner.substr(cut + 1), chart)};
}

}  // namespace cvect
