// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oredyn {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

double UPoly::eval(double at) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rational lc = leading();
    for (auto& c : r.c_) c /= lc;
    return r;
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& c : c_) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (leading() < 0) g = -g;
    UPoly r = *this;
    for (auto& c : r.c_) c = make_rational(c.get_num() * (l / c.get_den()) / g);
    return r;
}

UPoly UPoly::reflect() const {
    UPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly(*it);
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1));
    for (int k = degree() - dd; k >= 0; --k) {
        Rational f = rem[static_cast<std::size_t>(k + dd)] / d.leading();
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit) os << oredyn::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly pow(const UPoly& p, unsigned e) {
    UPoly r(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UPoly(1);
    return p.exact_div(gcd(p, p.derivative())).monic();
}

namespace {

// Scales by a positive rational to integer coefficients with content 1.
UPoly positive_primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly q = p.primitive();
    return sgn(q.leading()) == sgn(p.leading()) ? q : -q;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> s{positive_primitive(p), positive_primitive(p.derivative())};
    while (!s.back().is_zero()) s.push_back(positive_primitive(-s[s.size() - 2].divmod(s.back()).second));
    s.pop_back();
    return s;
}

int sign_variations(const std::vector<UPoly>& s, const Rational& at) {
    int v = 0, last = 0;
    for (const auto& p : s) {
        int sg = p.sign_at(at);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

}  // namespace

int count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0 || lo >= hi) return 0;
    // Squarefree input; endpoints may themselves be roots.
    auto s = sturm_sequence(squarefree_part(p));
    return sign_variations(s, lo) - sign_variations(s, hi);
}

Rational root_bound(const UPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading()));
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() <= 0) return out;
    UPoly sf = squarefree_part(p);
    auto s = sturm_sequence(sf);
    auto count = [&](const Rational& a, const Rational& b) { return sign_variations(s, a) - sign_variations(s, b); };
    Rational b = root_bound(sf);
    std::vector<std::pair<Rational, Rational>> work{{-b, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = count(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            // Normalize: exact rational roots become degenerate intervals and
            // the open end must not be a root of sf.
            while (true) {
                if (sf.sign_at(hi) == 0) {
                    lo = hi;
                    break;
                }
                if (sf.sign_at(lo) != 0) break;
                Rational mid = (lo + hi) / 2;
                if (count(mid, hi) == 1) lo = mid;
                else hi = mid;
            }
            if (lo != hi)
                if (auto r = rational_root_in(sf, lo, hi)) lo = hi = *r;
            out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::optional<Rational> rational_root_in(const UPoly& p, Rational lo, Rational hi) {
    UPoly sf = p.primitive();
    if (sf.sign_at(lo) == 0) return lo;
    if (sf.sign_at(hi) == 0) return hi;
    Integer lc = sf.leading().get_num();
    // Distinct fractions with denominators dividing lc are >= 1/lc^2 apart.
    Rational width = make_rational(1, 2 * lc * lc);
    int slo = sf.sign_at(lo);
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        int sm = sf.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    Rational cand = simplest_between(lo, hi);
    if (sf.eval(cand) == 0) return cand;
    return std::nullopt;
}

std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> out;
    for (auto [lo, hi] : isolate_real_roots(p))
        if (lo == hi) out.push_back(lo);
    return out;
}

namespace {

void bipoly_trim(BiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

UPoly determinant(std::vector<std::vector<UPoly>> m) {
    // Bareiss fraction-free elimination over the integral domain Q[y].
    const std::size_t n = m.size();
    if (n == 0) return UPoly(1);
    UPoly prev(1);
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return UPoly();
            std::swap(m[k], m[r]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = UPoly();
        }
        prev = m[k][k];
    }
    UPoly d = m[n - 1][n - 1];
    return sign_flip < 0 ? -d : d;
}

UPoly resultant(BiPoly a, BiPoly b) {
    bipoly_trim(a);
    bipoly_trim(b);
    if (a.empty() || b.empty()) return UPoly();
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (m == 0 && n == 0) return UPoly(1);
    if (m == 0) return pow(a[0], static_cast<unsigned>(n));
    if (n == 0) return pow(b[0], static_cast<unsigned>(m));
    const std::size_t sz = m + n;
    std::vector<std::vector<UPoly>> s(sz, std::vector<UPoly>(sz));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
    return determinant(std::move(s));
}

}  // namespace oredyn
