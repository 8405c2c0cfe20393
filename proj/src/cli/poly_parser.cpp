// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/poly_parser.hpp"

#include <cctype>

namespace oredyn {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    LaurentPoly parse() {
        LaurentPoly r = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return r;
    }

private:
    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    LaurentPoly constant(const Rational& c) const { return LaurentPoly(vars_.size(), c); }

    LaurentPoly expr() {
        LaurentPoly r(vars_.size());
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    LaurentPoly term() {
        LaurentPoly r = power();
        while (accept('*')) r = r * power();
        return r;
    }

    LaurentPoly power() {
        std::size_t at = i_;
        LaurentPoly base = atom();
        if (!accept('^')) return base;
        bool neg = accept('-');
        skip();
        std::size_t start = i_;
        Integer e = digits();
        if (!e.fits_slong_p() || e > 1 << 20) throw ParseError(start, "exponent too large");
        long n = e.get_si();
        if (!neg) return pow(base, static_cast<std::uint64_t>(n));
        if (!base.is_monomial()) throw ParseError(at, "negative power of a non-monomial");
        const auto& [ex, c] = *base.terms().begin();
        Exponent inv(ex.size());
        for (std::size_t k = 0; k < ex.size(); ++k) inv[k] = -ex[k];
        return pow(LaurentPoly::monomial(inv, 1 / c), static_cast<std::uint64_t>(n));
    }

    Integer digits() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError(start, "expected an integer");
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    LaurentPoly atom() {
        skip();
        if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            LaurentPoly r = expr();
            if (!accept(')')) throw ParseError(i_, "expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            if (accept('/')) {
                skip();
                std::size_t at = i_;
                Integer den = digits();
                if (den == 0) throw ParseError(at, "zero denominator");
                return constant(make_rational(num, den));
            }
            return constant(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name(s_.substr(start, i_ - start));
            for (std::size_t k = 0; k < vars_.size(); ++k)
                if (vars_[k] == name) return LaurentPoly::variable(vars_.size(), k);
            std::string allowed;
            for (const auto& v : vars_) allowed += (allowed.empty() ? "" : ", ") + v;
            throw ParseError(start, "unknown variable '" + name + "' (expected one of " + allowed + ")");
        }
        throw ParseError(i_, std::string("unexpected '") + c + "'");
    }
};

}  // namespace

LaurentPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace oredyn
