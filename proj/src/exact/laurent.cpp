// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oredyn {

LaurentPoly::LaurentPoly(std::size_t arity, const Rational& constant) : arity_(arity) {
    if (constant != 0) terms_.emplace(Exponent(arity, 0), constant);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index, std::int64_t power) {
    Exponent e(arity, 0);
    e.at(index) = power;
    return monomial(e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Rational LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::int64_t LaurentPoly::degree_in(std::size_t i) const {
    std::int64_t d = INT64_MIN;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return terms_.empty() ? -1 : d;
}

std::int64_t LaurentPoly::min_degree_in(std::size_t i) const {
    std::int64_t d = INT64_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return terms_.empty() ? 0 : d;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x < 0) return false;
    return true;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (arity_ == 0) arity_ = e.size();
    if (e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (arity_ == 0) arity_ = o.arity_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (arity_ == 0) arity_ = o.arity_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(std::max(a.arity_, b.arity_));
    if (a.is_zero() || b.is_zero()) return r;
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch in product");
    Exponent e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i] != 0) t *= pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (images.size() != arity_) throw std::invalid_argument("substitution arity mismatch");
    const std::size_t out_arity = images.empty() ? 0 : images[0].arity();
    // Cache powers per variable.
    std::vector<std::map<std::int64_t, LaurentPoly>> cache(arity_);
    auto power = [&](std::size_t i, std::int64_t k) -> const LaurentPoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        LaurentPoly v;
        if (k >= 0) {
            v = pow(images[i], static_cast<std::uint64_t>(k));
        } else {
            if (!images[i].is_monomial()) throw std::domain_error("negative power of a non-monomial");
            const auto& [e, c] = *images[i].terms().begin();
            Exponent ne(e.size());
            for (std::size_t j = 0; j < e.size(); ++j) ne[j] = e[j] * k;
            v = monomial(ne, pow(c, k));
        }
        return cache[i].emplace(k, std::move(v)).first->second;
    };
    LaurentPoly acc(out_arity);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t(out_arity, c);
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i] != 0) t = t * power(i, e[i]);
        acc += t;
    }
    return acc;
}

LaurentPoly LaurentPoly::homogeneous_part(std::int64_t d) const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (auto x : e) s += x;
        if (s == d) r.add_term(e, c);
    }
    return r;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then reverse-lexicographic for stability.
    std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        std::int64_t sx = 0, sy = 0;
        for (auto v : x.first) sx += v;
        for (auto v : y.first) sy += v;
        if (sx != sy) return sx > sy;
        return x.first > y.first;
    });
    for (const auto& [e, c] : ts) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
        bool need_star = false;
        if (is_const || a != 1) {
            os << oredyn::to_string(a);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars.at(i);
            if (e[i] < 0) os << "^(" << e[i] << ")";
            else if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::string LaurentPoly::to_string() const { return to_string(torus_variable_names(arity_)); }

LaurentPoly pow(const LaurentPoly& p, std::uint64_t e) {
    LaurentPoly r(p.arity(), Rational(1)), b = p;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

std::vector<std::string> torus_variable_names(std::size_t arity) {
    if (arity == 1) return {"u"};
    if (arity == 2) return {"u", "v"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < arity; ++i) v.push_back("u" + std::to_string(i + 1));
    return v;
}

}  // namespace oredyn
