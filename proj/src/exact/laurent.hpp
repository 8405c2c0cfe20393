// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oredyn {

using Exponent = std::vector<std::int64_t>;

/// Multivariate Laurent polynomial over Q with a fixed number of variables.
/// Ordinary polynomials (the plane case) are the subset with nonnegative
/// exponents. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t arity) : arity_(arity) {}
    LaurentPoly(std::size_t arity, const Rational& constant);
    static LaurentPoly monomial(const Exponent& e, const Rational& c = 1);
    static LaurentPoly variable(std::size_t arity, std::size_t index, std::int64_t power = 1);

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const { return coeff(Exponent(arity_, 0)); }

    /// Max total degree (sum of exponents) over terms; -1 for zero.
    std::int64_t total_degree() const;
    /// Max exponent of variable i; min_degree likewise.
    std::int64_t degree_in(std::size_t i) const;
    std::int64_t min_degree_in(std::size_t i) const;
    bool is_polynomial() const;

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /// Evaluation at a point with nonzero coordinates where negative powers occur.
    Rational eval(const std::vector<Rational>& point) const;

    /// Substitutes images[i] for variable i (images must be invertible
    /// monomials when negative exponents occur).
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    /// Homogeneous component of total degree d (polynomial case).
    LaurentPoly homogeneous_part(std::int64_t d) const;

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string to_string() const;

private:
    std::size_t arity_ = 0;
    Terms terms_;
};

LaurentPoly pow(const LaurentPoly& p, std::uint64_t e);

/// Default variable names: u, v for two variables, else u1..un.
std::vector<std::string> torus_variable_names(std::size_t arity);
inline std::vector<std::string> plane_variable_names() { return {"z", "w"}; }

}  // namespace oredyn
