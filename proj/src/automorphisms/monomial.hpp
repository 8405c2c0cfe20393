// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/cyclotomic.hpp"
#include "exact/int_matrix.hpp"
#include "exact/laurent.hpp"

#include <string>
#include <vector>

namespace oredyn {

/// Automorphism of k[u1^+-1, ..., un^+-1] given by
///   sigma(u_i) = lambda_i * u^(M e_i),
/// so sigma(u^a) = lambda^a * u^(M a). Column i of M is the exponent vector of
/// sigma(u_i).
class MonomialAutomorphism {
public:
    MonomialAutomorphism() = default;
    /// Throws InputError unless M is square with |det M| = 1 and every
    /// coefficient is nonzero. Empty coeffs means all ones.
    explicit MonomialAutomorphism(IntegerMatrix m, std::vector<Rational> coeffs = {});
    static MonomialAutomorphism identity(std::size_t n);

    std::size_t arity() const { return m_.rows(); }
    const IntegerMatrix& matrix() const { return m_; }
    const std::vector<Rational>& coeffs() const { return lambda_; }
    bool has_trivial_coeffs() const;

    /// lambda^a = prod lambda_i^a_i.
    Rational scalar_on(const IntVector& a) const;
    /// sigma(u_i).
    LaurentPoly image(std::size_t i) const;
    /// sigma(f), the ring automorphism applied to f.
    LaurentPoly apply(const LaurentPoly& f) const;

    /// Point q with u_i(q) = sigma(u_i)(p).
    TorusPoint apply_to_point(const TorusPoint& p) const;

    MonomialAutomorphism inverse() const;

    friend bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
        return a.m_ == b.m_ && a.lambda_ == b.lambda_;
    }

    /// "u -> u^2*v, v -> u*v".
    std::string to_string() const;

private:
    IntegerMatrix m_;
    std::vector<Rational> lambda_;
};

/// sigma o tau as ring maps: (sigma o tau)(f) = sigma(tau(f)).
/// Point maps compose in the opposite order:
///   apply_to_point(compose(s, t), p) == apply_to_point(t, apply_to_point(s, p)).
MonomialAutomorphism compose(const MonomialAutomorphism& sigma, const MonomialAutomorphism& tau);
MonomialAutomorphism iterate(const MonomialAutomorphism& sigma, std::int64_t n);

}  // namespace oredyn
