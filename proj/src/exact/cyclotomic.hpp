// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/laurent.hpp"
#include "exact/upoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oredyn {

/// A nonzero number scale * zeta_order^exponent with scale > 0 rational and
/// zeta_d = exp(2 pi i / d). Kept normalized: 0 <= exponent < order and
/// gcd(exponent, order) = 1 (order 1 when exponent is 0), so equal numbers
/// have equal representations. -1 is zeta_2.
class TorusCoord {
public:
    TorusCoord() = default;
    TorusCoord(const Rational& value);  // NOLINT: rationals embed
    TorusCoord(Rational scale, std::int64_t order, std::int64_t exponent);
    static TorusCoord root_of_unity(std::int64_t order, std::int64_t exponent) { return {1, order, exponent}; }

    const Rational& scale() const { return scale_; }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return exp_; }
    bool is_root_of_unity() const { return scale_ == 1; }
    bool is_rational() const { return order_ <= 2; }

    TorusCoord pow(std::int64_t e) const;
    friend TorusCoord operator*(const TorusCoord& a, const TorusCoord& b);
    friend bool operator==(const TorusCoord& a, const TorusCoord& b) {
        return a.scale_ == b.scale_ && a.order_ == b.order_ && a.exp_ == b.exp_;
    }
    friend bool operator<(const TorusCoord& a, const TorusCoord& b);

    std::string to_string() const;

private:
    void normalize();
    Rational scale_ = 1;
    std::int64_t order_ = 1, exp_ = 0;
};

using TorusPoint = std::vector<TorusCoord>;
std::string to_string(const TorusPoint& p);

/// Phi_n(x) with integer coefficients.
UPoly cyclotomic_polynomial(std::int64_t n);

/// Exact zero test for a Laurent polynomial evaluated at a torus point.
bool vanishes_at(const LaurentPoly& f, const TorusPoint& p);

/// Rational value when the evaluation is rational (used for checks).
bool evaluates_to(const LaurentPoly& f, const TorusPoint& p, const Rational& value);

std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace oredyn
