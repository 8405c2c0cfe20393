// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/int_matrix.hpp"
#include "exact/upoly.hpp"

#include <compare>
#include <optional>
#include <string>

namespace oredyn {

/// A real algebraic number: the unique root of a squarefree integer
/// polynomial inside a closed rational interval. Rational values are held
/// exactly as degenerate intervals (lo == hi).
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    explicit AlgebraicReal(const Rational& value);
    /// Validates that [lo, hi] isolates exactly one root of poly.
    AlgebraicReal(UPoly poly, Rational lo, Rational hi);

    const UPoly& poly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool is_rational() const { return lo_ == hi_; }
    /// Rational values are always detected at construction.
    std::optional<Rational> as_rational() const;

    /// Bisects until hi - lo <= width.
    void refine(const Rational& width);
    AlgebraicReal refined(const Rational& width) const {
        AlgebraicReal r = *this;
        r.refine(width);
        return r;
    }
    double approx() const;

    int compare(const Rational& q) const;
    int compare(const AlgebraicReal& o) const;
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) == 0; }
    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; }
    friend bool operator==(const AlgebraicReal& a, const Rational& q) { return a.compare(q) == 0; }

    std::string to_string() const;

private:
    void normalize();
    UPoly poly_;
    Rational lo_, hi_;
};

/// max |mu| over the complex eigenvalues mu of a square integer matrix.
/// When the maximum is attained by a real eigenvalue mu, the defining
/// polynomial is a factor of char_poly(m) (mu > 0) or of char_poly(m)(-x).
AlgebraicReal spectral_radius(const IntegerMatrix& m);

/// Largest real root of p (p must have one).
AlgebraicReal largest_real_root(const UPoly& p);

}  // namespace oredyn
