// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oredyn {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies x^i; the
/// leading coefficient is never zero (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c);  // NOLINT: constants convert implicitly
    UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT

    static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
    static UPoly monomial(const Rational& c, std::size_t degree);
    static UPoly from_integers(const std::vector<long>& coeffs);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& at) const;
    double eval(double at) const;
    int sign_at(const Rational& at) const { return sgn(eval(at)); }

    UPoly derivative() const;
    UPoly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    UPoly primitive() const;
    UPoly reflect() const;  // p(-x)
    UPoly compose(const UPoly& inner) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    /// Exact quotient; throws std::logic_error when d does not divide.
    UPoly exact_div(const UPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly pow(const UPoly& p, unsigned e);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Roots of p in the half-open interval (lo, hi], counted without
/// multiplicity. p need not be squarefree.
int count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi);
/// Cauchy bound: all complex roots have modulus < bound.
Rational root_bound(const UPoly& p);

/// Isolating intervals for the distinct real roots of p, in increasing order.
/// Each interval [lo, hi] contains exactly one root of p; lo == hi exactly when
/// the root is rational, otherwise p is nonzero at both endpoints.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p);

/// The root of p in [lo, hi] when it is rational; p must have exactly one
/// root there.
std::optional<Rational> rational_root_in(const UPoly& p, Rational lo, Rational hi);

/// Distinct rational roots, increasing.
std::vector<Rational> rational_roots(const UPoly& p);

/// Polynomial in x with coefficients in Q[y]; entry i multiplies x^i.
using BiPoly = std::vector<UPoly>;

/// Resultant in x of two polynomials with coefficients in Q[y].
UPoly resultant(BiPoly a, BiPoly b);

/// Determinant of a square matrix over Q[y] (fraction-free elimination).
UPoly determinant(std::vector<std::vector<UPoly>> m);

}  // namespace oredyn
