// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oredyn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed or out-of-contract input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a configured resource cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string cap, const std::string& what)
        : std::runtime_error(what), cap_(std::move(cap)) {}
    const std::string& cap() const { return cap_; }

private:
    std::string cap_;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "a", "-a", "a/b" (base 10). Throws InputError.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// q^e for any integer e (q must be nonzero when e < 0).
Rational pow(const Rational& q, std::int64_t e);
Integer pow(const Integer& z, unsigned long e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// The fraction with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace oredyn
