// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace oredyn {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

TorusCoord::TorusCoord(const Rational& value) {
    if (value == 0) throw InputError("torus coordinates must be nonzero");
    scale_ = abs(value);
    order_ = value < 0 ? 2 : 1;
    exp_ = value < 0 ? 1 : 0;
}

TorusCoord::TorusCoord(Rational scale, std::int64_t order, std::int64_t exponent)
    : scale_(std::move(scale)), order_(order), exp_(exponent) {
    if (scale_ == 0) throw InputError("torus coordinates must be nonzero");
    if (order_ < 1) throw InputError("root of unity order must be >= 1");
    normalize();
}

void TorusCoord::normalize() {
    if (scale_ < 0) {
        // Absorb the sign: -1 = zeta_2.
        scale_ = -scale_;
        std::int64_t l = lcm64(order_, 2);
        exp_ = exp_ * (l / order_) + l / 2;
        order_ = l;
    }
    exp_ = mod(exp_, order_);
    if (exp_ == 0) {
        order_ = 1;
        return;
    }
    std::int64_t g = gcd64(exp_, order_);
    exp_ /= g;
    order_ /= g;
}

TorusCoord TorusCoord::pow(std::int64_t e) const {
    // exp * e is reduced mod order first to avoid overflow.
    return TorusCoord(oredyn::pow(scale_, e), order_, mod(mod(exp_, order_) * mod(e, order_), order_));
}

TorusCoord operator*(const TorusCoord& a, const TorusCoord& b) {
    std::int64_t l = lcm64(a.order_, b.order_);
    return TorusCoord(a.scale_ * b.scale_, l, a.exp_ * (l / a.order_) + b.exp_ * (l / b.order_));
}

bool operator<(const TorusCoord& a, const TorusCoord& b) {
    return std::tie(a.order_, a.exp_) < std::tie(b.order_, b.exp_) ||
           (a.order_ == b.order_ && a.exp_ == b.exp_ && a.scale_ < b.scale_);
}

std::string TorusCoord::to_string() const {
    std::string s = oredyn::to_string(scale_);
    if (order_ == 1) return s;
    if (order_ == 2) return "-" + s;
    std::string z = "zeta_" + std::to_string(order_);
    if (exp_ != 1) z += "^" + std::to_string(exp_);
    return scale_ == 1 ? z : s + "*" + z;
}

std::string to_string(const TorusPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

UPoly cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    UPoly p = UPoly::monomial(1, static_cast<std::size_t>(n)) - UPoly(1);
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = p.exact_div(cyclotomic_polynomial(d));
    return p;
}

namespace {

// Value of f at p as a polynomial in zeta_L, reduced modulo Phi_L.
UPoly evaluate_cyclotomic(const LaurentPoly& f, const TorusPoint& p, std::int64_t& L) {
    if (p.size() != f.arity()) throw std::invalid_argument("point arity mismatch");
    L = 1;
    for (const auto& c : p) L = lcm64(L, c.order());
    std::vector<Rational> acc(static_cast<std::size_t>(L));
    for (const auto& [e, c] : f.terms()) {
        Rational scale = c;
        std::int64_t k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            scale *= pow(p[i].scale(), e[i]);
            std::int64_t step = p[i].exponent() * (L / p[i].order());
            k = mod(k + mod(step, L) * mod(e[i], L), L);
        }
        acc[static_cast<std::size_t>(k)] += scale;
    }
    return UPoly(std::move(acc)).divmod(cyclotomic_polynomial(L)).second;
}

}  // namespace

bool vanishes_at(const LaurentPoly& f, const TorusPoint& p) {
    std::int64_t L;
    return evaluate_cyclotomic(f, p, L).is_zero();
}

bool evaluates_to(const LaurentPoly& f, const TorusPoint& p, const Rational& value) {
    std::int64_t L;
    UPoly r = evaluate_cyclotomic(f, p, L);
    return r == UPoly(value);
}

}  // namespace oredyn
