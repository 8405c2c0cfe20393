// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "automorphisms/monomial.hpp"

namespace oredyn {

MonomialAutomorphism::MonomialAutomorphism(IntegerMatrix m, std::vector<Rational> coeffs)
    : m_(std::move(m)), lambda_(std::move(coeffs)) {
    if (!m_.is_square() || m_.rows() == 0) throw InputError("matrix must be square and nonempty");
    Integer det = determinant(m_);
    if (abs(det) != 1) throw InputError("matrix determinant is " + oredyn::to_string(det) + ", expected +1 or -1");
    if (lambda_.empty()) lambda_.assign(m_.rows(), Rational(1));
    if (lambda_.size() != m_.rows())
        throw InputError("expected " + std::to_string(m_.rows()) + " coefficients, got " +
                         std::to_string(lambda_.size()));
    for (const auto& c : lambda_)
        if (c == 0) throw InputError("coefficients must be nonzero");
}

MonomialAutomorphism MonomialAutomorphism::identity(std::size_t n) {
    return MonomialAutomorphism(IntegerMatrix::identity(n));
}

bool MonomialAutomorphism::has_trivial_coeffs() const {
    for (const auto& c : lambda_)
        if (c != 1) return false;
    return true;
}

Rational MonomialAutomorphism::scalar_on(const IntVector& a) const {
    Rational s = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s *= pow(lambda_[i], a[i].get_si());
    return s;
}

LaurentPoly MonomialAutomorphism::image(std::size_t i) const {
    Exponent e(arity());
    for (std::size_t r = 0; r < arity(); ++r) e[r] = m_(r, i).get_si();
    return LaurentPoly::monomial(e, lambda_[i]);
}

LaurentPoly MonomialAutomorphism::apply(const LaurentPoly& f) const {
    if (f.arity() != arity() && !f.is_zero()) throw std::invalid_argument("arity mismatch");
    LaurentPoly out(arity());
    Exponent e(arity());
    IntVector a(arity());
    for (const auto& [ex, c] : f.terms()) {
        for (std::size_t i = 0; i < arity(); ++i) a[i] = ex[i];
        IntVector b = m_ * a;
        for (std::size_t i = 0; i < arity(); ++i) e[i] = b[i].get_si();
        out.add_term(e, c * scalar_on(a));
    }
    return out;
}

TorusPoint MonomialAutomorphism::apply_to_point(const TorusPoint& p) const {
    if (p.size() != arity()) throw std::invalid_argument("point arity mismatch");
    TorusPoint q;
    q.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        TorusCoord c(lambda_[i]);
        for (std::size_t j = 0; j < arity(); ++j)
            if (m_(j, i) != 0) c = c * p[j].pow(m_(j, i).get_si());
        q.push_back(c);
    }
    return q;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const {
    IntegerMatrix inv = unimodular_inverse(m_);
    // sigma^-1(u_i) = mu_i u^(N e_i) with mu_i = lambda^(-N e_i).
    std::vector<Rational> mu(arity());
    for (std::size_t i = 0; i < arity(); ++i) mu[i] = 1 / scalar_on(inv.column(i));
    return MonomialAutomorphism(inv, mu);
}

std::string MonomialAutomorphism::to_string() const {
    auto vars = torus_variable_names(arity());
    std::string s;
    for (std::size_t i = 0; i < arity(); ++i) {
        if (i) s += ", ";
        s += vars[i] + " -> " + image(i).to_string(vars);
    }
    return s;
}

MonomialAutomorphism compose(const MonomialAutomorphism& sigma, const MonomialAutomorphism& tau) {
    if (sigma.arity() != tau.arity()) throw InputError("cannot compose automorphisms of different arity");
    const std::size_t n = sigma.arity();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = tau.coeffs()[i] * sigma.scalar_on(tau.matrix().column(i));
    return MonomialAutomorphism(sigma.matrix() * tau.matrix(), c);
}

MonomialAutomorphism iterate(const MonomialAutomorphism& sigma, std::int64_t n) {
    MonomialAutomorphism base = n < 0 ? sigma.inverse() : sigma;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    MonomialAutomorphism acc = MonomialAutomorphism::identity(sigma.arity());
    while (e) {
        if (e & 1u) acc = compose(acc, base);
        e >>= 1u;
        if (e) base = compose(base, base);
    }
    return acc;
}

}  // namespace oredyn
