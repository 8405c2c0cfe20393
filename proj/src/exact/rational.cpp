// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/rational.hpp"

#include <cctype>

namespace oredyn {

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
        throw InputError("not a rational number: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_integer(num), d);
}

Rational pow(const Rational& q, std::int64_t e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("negative power of zero");
        Rational inv = 1 / q;
        return pow(inv, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(n, d);
}

Integer pow(const Integer& z, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    // Continued-fraction descent (Stern-Brocot).
    if (lo > hi) return simplest_between(hi, lo);
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    Integer fl = floor(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return Rational(fl + 1);
    // Both in (fl, fl+1): recurse on reciprocals of fractional parts.
    Rational a = lo - fl, b = hi - fl;
    Rational inner = simplest_between(1 / b, 1 / a);
    return fl + 1 / inner;
}

}  // namespace oredyn
