// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "invariants/invariants.hpp"

#include "exact/rational_matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oredyn {

std::vector<Integer> coprime_base(const std::vector<Integer>& xs) {
    std::vector<Integer> base;
    for (const auto& x : xs) {
        Integer a = abs(x);
        if (a > 1) base.push_back(a);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < base.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                Integer g = gcd(base[i], base[j]);
                if (g == 1) continue;
                Integer a = base[i] / g, b = base[j] / g;
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
                for (const Integer& t : {a, b, g})
                    if (t > 1) base.push_back(t);
                changed = true;
            }
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
}

namespace {

Integer valuation(Integer x, const Integer& p) {
    Integer v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

LaurentPoly monomial_of(const IntVector& a) {
    Exponent e;
    for (const auto& x : a) e.push_back(x.get_si());
    return LaurentPoly::monomial(e);
}

}  // namespace

std::vector<LaurentPoly> InvariantMonomials::invariants() const {
    std::vector<LaurentPoly> out;
    for (const auto& a : invariant_lattice) out.push_back(monomial_of(a));
    return out;
}

InvariantMonomials invariant_monomials(const MonomialAutomorphism& sigma, std::int64_t m) {
    if (m < 1) throw InputError("period must be at least 1");
    InvariantMonomials out;
    out.period = m;
    const MonomialAutomorphism sm = iterate(sigma, m);
    const std::size_t n = sigma.arity();
    out.fixed_lattice = integer_kernel(sm.matrix() - IntegerMatrix::identity(n));
    if (out.fixed_lattice.empty()) return out;
    for (const auto& b : out.fixed_lattice) out.fixed_scalars.push_back(sm.scalar_on(b));

    // x in Z^k has trivial scalar iff all valuations over a coprime base
    // vanish and the sign is +1: solve V x = 0, s.x - 2 y = 0.
    const std::size_t k = out.fixed_lattice.size();
    std::vector<Integer> parts;
    for (const auto& c : out.fixed_scalars) {
        parts.push_back(c.get_num());
        parts.push_back(c.get_den());
    }
    const std::vector<Integer> base = coprime_base(parts);
    IntegerMatrix sys(base.size() + 1, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        const Rational& c = out.fixed_scalars[j];
        for (std::size_t r = 0; r < base.size(); ++r)
            sys(r, j) = valuation(abs(c.get_num()), base[r]) - valuation(c.get_den(), base[r]);
        sys(base.size(), j) = c < 0 ? 1 : 0;
    }
    sys(base.size(), k) = -2;
    std::vector<IntVector> combos;
    for (const auto& sol : integer_kernel(sys)) {
        IntVector a(n, 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) a[i] += sol[j] * out.fixed_lattice[j][i];
        combos.push_back(std::move(a));
    }
    out.invariant_lattice = lattice_echelon(std::move(combos));
    for (const auto& a : out.invariant_lattice)
        if (sm.scalar_on(a) != 1 || sm.matrix() * a != a)
            throw std::logic_error("invariant monomial failed verification");
    return out;
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Monomial: return "monomial";
        case WitnessKind::Fibration: return "fibration";
        case WitnessKind::BruteForce: return "brute_force";
    }
    return "unknown";
}

std::string RationalInvariant::to_string(const std::vector<std::string>& vars) const {
    std::string top = p.to_string(vars);
    if (q == LaurentPoly(q.arity(), Rational(1))) return top;
    return "(" + top + ")/(" + q.to_string(vars) + ")";
}

namespace {

struct SearchSpace {
    std::vector<Exponent> basis;
    std::function<LaurentPoly(const LaurentPoly&)> act;
    std::size_t arity = 0;
};

void box_exponents(std::size_t n, int d, Exponent& cur, std::vector<Exponent>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int x = -d; x <= d; ++x) {
        cur.push_back(x);
        box_exponents(n, d, cur, out);
        cur.pop_back();
    }
}

LaurentPoly to_poly(const QVector& coords, const std::vector<Exponent>& basis, std::size_t arity) {
    LaurentPoly f(arity);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0) f.add_term(basis[i], coords[i]);
    return f;
}

// Scales so the leading stored coefficient is 1.
LaurentPoly monic(LaurentPoly f) {
    if (f.is_zero()) return f;
    Rational lead = f.terms().rbegin()->second;
    return f * Rational(1 / lead);
}

}  // namespace

InvariantSearch bounded_invariant_search(const Automorphism& sigma, int degree_bound, std::int64_t m,
                                         std::size_t max_dimension) {
    if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
    if (m < 1) throw InputError("period must be at least 1");
    InvariantSearch out;
    out.degree_bound = degree_bound;
    out.period = m;

    SearchSpace sp;
    if (is_monomial(sigma)) {
        const MonomialAutomorphism sm = iterate(as_monomial(sigma), m);
        sp.arity = sm.arity();
        double size = 1;
        for (std::size_t i = 0; i < sp.arity; ++i) size *= 2.0 * degree_bound + 1;
        if (size > static_cast<double>(max_dimension))
            throw ResourceError("degree-bound", "search space of dimension " + std::to_string(static_cast<long long>(size)) +
                                                   " exceeds the cap " + std::to_string(max_dimension));
        Exponent cur;
        box_exponents(sp.arity, degree_bound, cur, sp.basis);
        sp.act = [sm](const LaurentPoly& f) { return sm.apply(f); };
    } else {
        const PlaneAutomorphism sm = iterate(as_plane(sigma), m);
        sp.arity = 2;
        for (int t = 0; t <= degree_bound; ++t)
            for (int i = t; i >= 0; --i) sp.basis.push_back({i, t - i});
        double image = 0.5 * (degree_bound * sm.degree() + 1.0) * (degree_bound * sm.degree() + 2.0);
        if (image > static_cast<double>(max_dimension))
            throw ResourceError("degree-bound", "image space of dimension " + std::to_string(static_cast<long long>(image)) +
                                                    " exceeds the cap " + std::to_string(max_dimension));
        sp.act = [sm](const LaurentPoly& f) { return sm.pullback(f); };
    }
    const std::size_t dim = sp.basis.size();
    out.space_dimension = dim;

    // Images of the basis monomials, indexed over the union of all exponents.
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index[sp.basis[i]] = i;
    std::vector<LaurentPoly> images;
    for (const auto& e : sp.basis) {
        images.push_back(sp.act(LaurentPoly::monomial(e)));
        for (const auto& [x, c] : images.back().terms())
            if (!index.count(x)) index.emplace(x, index.size());
        if (index.size() > max_dimension)
            throw ResourceError("degree-bound", "image space exceeds the cap " + std::to_string(max_dimension));
    }
    const std::size_t total = index.size();
    auto image_of = [&](const QVector& v) {
        QVector r(total);
        for (std::size_t i = 0; i < dim; ++i) {
            if (v[i] == 0) continue;
            for (const auto& [x, c] : images[i].terms()) r[index.at(x)] += v[i] * c;
        }
        return r;
    };

    // Largest stable subspace: W <- {w in W : T w in W} until it stops shrinking.
    std::vector<QVector> w;
    for (std::size_t i = 0; i < dim; ++i) {
        QVector e(dim);
        e[i] = 1;
        w.push_back(std::move(e));
    }
    while (true) {
        const std::size_t r = w.size();
        if (r == 0) break;
        QMatrix sys(total, QVector(2 * r));
        for (std::size_t j = 0; j < r; ++j) {
            QVector tj = image_of(w[j]);
            for (std::size_t i = 0; i < total; ++i) sys[i][j] = tj[i];
            for (std::size_t i = 0; i < dim; ++i) sys[i][r + j] = -w[j][i];
        }
        std::vector<QVector> next;
        for (const auto& sol : rational_kernel(sys, 2 * r)) {
            QVector v(dim);
            for (std::size_t j = 0; j < r; ++j)
                if (sol[j] != 0)
                    for (std::size_t i = 0; i < dim; ++i) v[i] += sol[j] * w[j][i];
            next.push_back(std::move(v));
        }
        next = span_basis(next, dim);
        bool done = next.size() == r;
        w = std::move(next);
        if (done) break;
    }
    w = span_basis(w, dim);
    const std::size_t r = w.size();
    out.stable_dimension = r;
    if (r == 0) return out;

    std::vector<std::size_t> pivot(r);
    for (std::size_t i = 0; i < r; ++i)
        pivot[i] = static_cast<std::size_t>(std::find_if(w[i].begin(), w[i].end(), [](const Rational& x) { return x != 0; }) -
                                            w[i].begin());
    QMatrix a(r, QVector(r));
    for (std::size_t j = 0; j < r; ++j) {
        QVector tj = image_of(w[j]);
        for (std::size_t i = 0; i < r; ++i) a[i][j] = tj[pivot[i]];
    }

    const Exponent zero(sp.arity, 0);
    const LaurentPoly one(sp.arity, Rational(1));
    for (const Rational& mu : rational_roots(char_poly(a))) {
        QMatrix shifted = a;
        for (std::size_t i = 0; i < r; ++i) shifted[i][i] -= mu;
        std::vector<QVector> eig_coords;
        for (const auto& c : rational_kernel(shifted, r)) {
            QVector v(dim);
            for (std::size_t j = 0; j < r; ++j)
                if (c[j] != 0)
                    for (std::size_t i = 0; i < dim; ++i) v[i] += c[j] * w[j][i];
            eig_coords.push_back(std::move(v));
        }
        eig_coords = span_basis(eig_coords, dim);
        std::vector<LaurentPoly> eig;
        for (const auto& v : eig_coords) {
            LaurentPoly f = to_poly(v, sp.basis, sp.arity);
            if (mu == 1) f -= LaurentPoly(sp.arity, f.constant_term());
            if (!f.is_zero()) eig.push_back(monic(std::move(f)));
        }
        if (mu == 1) {
            for (auto& f : eig) out.invariants.push_back({f, one, m});
            continue;
        }
        for (const auto& f : eig) out.semi_invariants.push_back({f, mu, m});
        for (std::size_t i = 1; i < eig.size(); ++i) out.invariants.push_back({eig[i], eig[0], m});
    }
    for (const auto& inv : out.invariants)
        if (sp.act(inv.p) * inv.q != inv.p * sp.act(inv.q))
            throw std::logic_error("rational invariant failed verification");
    for (const auto& s : out.semi_invariants)
        if (sp.act(s.f) != s.f * s.eigenvalue) throw std::logic_error("semi-invariant failed verification");
    return out;
}

FibrationReport invariant_fibration(const PlaneAutomorphism& sigma) {
    PlaneClassification c = classify_plane(sigma);
    if (c.kind == PlaneClassification::Kind::Henon)
        throw InputError("invariant fibration requires an elementary-type map");
    FibrationReport out;
    if (!c.elementary_form) return out;
    out.has_rational_form = true;
    const ElementaryFactor& tau = *c.elementary_form;
    PlaneAutomorphism conj = PlaneAutomorphism::from_word(c.elementary_conjugator);
    out.h = conj.inverse().pair().g;
    out.beta = tau.beta;
    out.gamma = tau.gamma;
    const LaurentPoly one(2, Rational(1));
    if (sigma.pullback(out.h) != out.h * out.beta + LaurentPoly(2, out.gamma))
        throw std::logic_error("fibration failed verification");
    if (out.beta == 1 && out.gamma == 0) {
        out.base_order = 1;
        out.invariants.push_back({out.h, one, 1, WitnessKind::Fibration});
    } else if (out.beta == -1) {
        out.base_order = 2;
        out.invariants.push_back({out.h, one, 2, WitnessKind::Fibration});
        LaurentPoly centred = out.h - LaurentPoly(2, Rational(out.gamma / 2));
        out.invariants.push_back({centred * centred, one, 1, WitnessKind::Fibration});
    }
    if (out.beta != 1) {
        LaurentPoly f = out.h - LaurentPoly(2, Rational(out.gamma / (1 - out.beta)));
        out.semi_invariant = SemiInvariant{f, out.beta, 1};
    }
    for (const auto& inv : out.invariants) {
        PlaneAutomorphism s = iterate(sigma, inv.period);
        if (s.pullback(inv.p) != inv.p) throw std::logic_error("fibre invariant failed verification");
    }
    return out;
}

PeriodicDivisors periodic_divisors(const MonomialAutomorphism& sigma, std::int64_t bound) {
    if (bound < 1) throw InputError("period bound must be at least 1");
    if (sigma.arity() != 2) throw InputError("periodic divisors are enumerated on the 2-torus only");
    PeriodicDivisors out;
    out.bound = bound;
    const std::size_t n = sigma.arity();
    const IntegerMatrix id = IntegerMatrix::identity(n);
    const IntegerMatrix& mat = sigma.matrix();
    auto seen = [&](const IntVector& a) {
        return std::any_of(out.directions.begin(), out.directions.end(), [&](const auto& d) { return d.a == a; });
    };
    IntegerMatrix pw = id;
    for (std::int64_t m = 1; m <= bound; ++m) {
        pw = pw * mat;
        for (int sgn : {1, -1}) {
            IntegerMatrix target = sgn == 1 ? id : IntegerMatrix(id.rows(), id.cols()) - id;
            if (pw == target) {
                if (!out.all_directions) {
                    out.all_directions = true;
                    out.all_period = m;
                }
                continue;
            }
            for (const auto& v : integer_kernel(pw - target)) {
                IntVector a = normalize_sign(make_primitive(v));
                if (seen(a)) continue;
                PeriodicDirection d;
                d.a = a;
                d.period = m;
                d.sign = sgn;
                IntVector img = a;
                for (std::int64_t k = 1; k <= 2 * m; ++k) {
                    img = mat * img;
                    if (img == a) {
                        d.return_time = k;
                        break;
                    }
                }
                d.scalar = iterate(sigma, d.return_time).scalar_on(a);
                d.family_periodic = d.scalar == 1 || d.scalar == -1;
                out.infinitely_many = out.infinitely_many || d.family_periodic;
                out.directions.push_back(std::move(d));
            }
        }
    }
    if (out.all_directions && !out.infinitely_many) {
        std::int64_t k = matrix_power(mat, out.all_period) == id ? out.all_period : 2 * out.all_period;
        out.infinitely_many = invariant_monomials(sigma, k).has_invariant();
    }
    return out;
}

}  // namespace oredyn
