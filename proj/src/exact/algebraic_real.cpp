// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/algebraic_real.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace oredyn {

AlgebraicReal::AlgebraicReal(const Rational& value)
    : poly_(UPoly(std::vector<Rational>{-value, 1}).primitive()), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(UPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_.degree() < 1) throw std::invalid_argument("algebraic real needs a nonconstant polynomial");
    if (lo_ > hi_) std::swap(lo_, hi_);
    poly_ = squarefree_part(poly_).primitive();
    int roots = count_real_roots(poly_, lo_, hi_) + (poly_.sign_at(lo_) == 0 ? 1 : 0);
    if (lo_ == hi_) roots = poly_.sign_at(lo_) == 0 ? 1 : 0;
    if (roots != 1) throw std::invalid_argument("interval does not isolate exactly one root of " + poly_.to_string());
    normalize();
}

void AlgebraicReal::normalize() {
    if (lo_ != hi_) {
        auto r = rational_root_in(poly_, lo_, hi_);
        if (!r) return;
        lo_ = hi_ = *r;
    }
    poly_ = UPoly(std::vector<Rational>{-lo_, 1}).primitive();
}

std::optional<Rational> AlgebraicReal::as_rational() const {
    if (is_rational()) return lo_;
    return std::nullopt;
}

void AlgebraicReal::refine(const Rational& width) {
    while (!is_rational() && hi_ - lo_ > width) {
        Rational mid = (lo_ + hi_) / 2;
        int sm = poly_.sign_at(mid);
        if (sm == 0) {
            lo_ = hi_ = mid;
            normalize();
            return;
        }
        if (sm == poly_.sign_at(lo_)) lo_ = mid;
        else hi_ = mid;
    }
}

double AlgebraicReal::approx() const {
    AlgebraicReal r = refined(Rational(1, 1) / Rational(Integer(1) << 60));
    return Rational((r.lo_ + r.hi_) / 2).get_d();
}

int AlgebraicReal::compare(const Rational& q) const {
    if (q < lo_) return 1;
    if (q > hi_) return -1;
    if (is_rational()) return cmp(lo_, q);
    int sq = poly_.sign_at(q);
    if (sq == 0) return 0;
    // The root lies strictly between the endpoint whose sign differs from q's.
    return sq == poly_.sign_at(lo_) ? 1 : -1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (o.is_rational()) return compare(o.lo_);
    if (is_rational()) return -o.compare(lo_);
    AlgebraicReal a = *this, b = o;
    UPoly g = gcd(a.poly_, b.poly_);
    while (true) {
        if (a.hi_ < b.lo_) return -1;
        if (b.hi_ < a.lo_) return 1;
        if (g.degree() >= 1) {
            Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
            int common = count_real_roots(g, lo, hi) + (g.sign_at(lo) == 0 ? 1 : 0);
            if (lo == hi) common = g.sign_at(lo) == 0 ? 1 : 0;
            if (common > 0) return 0;
        }
        a.refine((a.hi_ - a.lo_) / 2);
        b.refine((b.hi_ - b.lo_) / 2);
        if (a.is_rational()) return -b.compare(a.lo_);
        if (b.is_rational()) return a.compare(b.lo_);
    }
}

std::string AlgebraicReal::to_string() const {
    if (is_rational()) return oredyn::to_string(lo_);
    std::ostringstream os;
    os << "root of " << poly_.to_string() << " in [" << oredyn::to_string(lo_) << ", " << oredyn::to_string(hi_) << "]";
    return os.str();
}

AlgebraicReal largest_real_root(const UPoly& p) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw std::invalid_argument("polynomial has no real root");
    auto [lo, hi] = roots.back();
    if (lo == hi) return AlgebraicReal(lo);
    return AlgebraicReal(squarefree_part(p), lo, hi);
}

namespace {

// Shrinks the defining polynomial of value to a factor f when value is a root of f.
std::optional<AlgebraicReal> restrict_to(const AlgebraicReal& value, const UPoly& factor) {
    UPoly g = gcd(value.poly(), factor);
    if (g.degree() < 1) return std::nullopt;
    if (value.is_rational()) {
        if (g.eval(value.lo()) == 0) return value;
        return std::nullopt;
    }
    // value's interval isolates one root of poly(), hence at most one of g.
    int inside = count_real_roots(g, value.lo(), value.hi());
    if (inside == 0) return std::nullopt;
    return AlgebraicReal(g, value.lo(), value.hi());
}

}  // namespace

AlgebraicReal spectral_radius(const IntegerMatrix& m) {
    UPoly chi = char_poly(m);
    const int n = chi.degree();
    // R(y) = Res_x(chi(x), x^n chi(y/x)) vanishes exactly at the products
    // mu_i mu_j; its largest real root is rho^2 (attained by mu * conj(mu)).
    BiPoly a, b(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a.push_back(UPoly(chi.coeff(static_cast<std::size_t>(i))));
    for (int k = 0; k <= n; ++k) b[static_cast<std::size_t>(n - k)] = UPoly::monomial(chi.coeff(static_cast<std::size_t>(k)), static_cast<std::size_t>(k));
    UPoly r = resultant(a, b);
    // P(x) = R(x^2).
    std::vector<Rational> pc(2 * r.coeffs().size());
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) pc[2 * i] = r.coeffs()[i];
    UPoly p(std::move(pc));
    if (p.degree() < 1) throw std::logic_error("degenerate spectral resultant");
    AlgebraicReal rho = largest_real_root(p);
    if (rho.compare(Rational(0)) <= 0) return AlgebraicReal(Rational(0));
    if (auto f = restrict_to(rho, chi)) return *f;
    if (auto f = restrict_to(rho, chi.reflect())) return *f;
    return rho;
}

}  // namespace oredyn
