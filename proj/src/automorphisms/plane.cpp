// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "automorphisms/plane.hpp"

#include <stdexcept>

namespace oredyn {

namespace {

const LaurentPoly& var_z() {
    static const LaurentPoly z = LaurentPoly::variable(2, 0);
    return z;
}

const LaurentPoly& var_w() {
    static const LaurentPoly w = LaurentPoly::variable(2, 1);
    return w;
}

LaurentPoly constant(const Rational& c) { return LaurentPoly(2, c); }

// p(x) for a univariate p and a plane polynomial x (Horner).
LaurentPoly eval_upoly(const UPoly& p, const LaurentPoly& x) {
    LaurentPoly acc(2);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + constant(p.coeff(static_cast<std::size_t>(i)));
    return acc;
}

LaurentPoly partial(const LaurentPoly& f, std::size_t var) {
    LaurentPoly d(2);
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponent ne = e;
        --ne[var];
        d.add_term(ne, c * e[var]);
    }
    return d;
}

std::optional<ElementaryFactor> as_triangular(const PlaneFactor& f) {
    if (const auto* e = std::get_if<ElementaryFactor>(&f)) return *e;
    const auto& a = std::get<AffineFactor>(f);
    if (!a.is_triangular()) return std::nullopt;
    ElementaryFactor e;
    e.alpha = a.linear[0][0];
    e.beta = a.linear[1][1];
    e.gamma = a.translation[1];
    e.p = UPoly(std::vector<Rational>{a.translation[0], a.linear[0][1]});
    return e;
}

std::optional<AffineFactor> as_affine(const PlaneFactor& f) {
    if (const auto* a = std::get_if<AffineFactor>(&f)) return *a;
    const auto& e = std::get<ElementaryFactor>(f);
    if (e.p.degree() > 1) return std::nullopt;
    AffineFactor a;
    a.linear = {{{e.alpha, e.p.coeff(1)}, {0, e.beta}}};
    a.translation = {e.p.coeff(0), e.gamma};
    return a;
}

// e1 o e2.
ElementaryFactor compose_elementary(const ElementaryFactor& e1, const ElementaryFactor& e2) {
    ElementaryFactor r;
    r.alpha = e1.alpha * e2.alpha;
    r.beta = e1.beta * e2.beta;
    r.gamma = e1.beta * e2.gamma + e1.gamma;
    r.p = UPoly(e1.alpha) * e2.p + e1.p.compose(UPoly(std::vector<Rational>{e2.gamma, e2.beta}));
    return r;
}

// a1 o a2.
AffineFactor compose_affine(const AffineFactor& a1, const AffineFactor& a2) {
    AffineFactor r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r.linear[i][j] = a1.linear[i][0] * a2.linear[0][j] + a1.linear[i][1] * a2.linear[1][j];
        r.translation[i] = a1.linear[i][0] * a2.translation[0] + a1.linear[i][1] * a2.translation[1] + a1.translation[i];
    }
    return r;
}

bool is_identity(const PlaneFactor& f) {
    auto a = as_affine(f);
    return a && *a == AffineFactor{};
}

bool is_affine_kind(const PlaneFactor& f) { return std::holds_alternative<AffineFactor>(f); }

void validate(const PlaneFactor& f) {
    if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
        if (e->alpha == 0 || e->beta == 0) throw InputError("elementary factor needs nonzero alpha and beta");
    } else if (std::get<AffineFactor>(f).det() == 0) {
        throw InputError("affine factor has a singular linear part");
    }
}

AffineFactor swap_factor() {
    AffineFactor s;
    s.linear = {{{0, 1}, {1, 0}}};
    return s;
}

}  // namespace

PolyPair identity_pair() { return {var_z(), var_w()}; }

PolyPair compose_pairs(const PolyPair& a, const PolyPair& b) {
    std::vector<LaurentPoly> images{b.f, b.g};
    return {a.f.substitute(images), a.g.substitute(images)};
}

PolyPair factor_pair(const PlaneFactor& f) {
    if (const auto* e = std::get_if<ElementaryFactor>(&f))
        return {var_z() * e->alpha + eval_upoly(e->p, var_w()), var_w() * e->beta + constant(e->gamma)};
    const auto& a = std::get<AffineFactor>(f);
    return {var_z() * a.linear[0][0] + var_w() * a.linear[0][1] + constant(a.translation[0]),
            var_z() * a.linear[1][0] + var_w() * a.linear[1][1] + constant(a.translation[1])};
}

PlaneFactor invert_factor(const PlaneFactor& f) {
    if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
        // z = (z' - p((w' - gamma)/beta)) / alpha, w = (w' - gamma) / beta.
        ElementaryFactor r;
        r.alpha = 1 / e->alpha;
        r.beta = 1 / e->beta;
        r.gamma = -e->gamma / e->beta;
        UPoly inner(std::vector<Rational>{r.gamma, r.beta});
        r.p = UPoly(-1 / e->alpha) * e->p.compose(inner);
        return r;
    }
    const auto& a = std::get<AffineFactor>(f);
    Rational d = a.det();
    AffineFactor r;
    r.linear = {{{a.linear[1][1] / d, -a.linear[0][1] / d}, {-a.linear[1][0] / d, a.linear[0][0] / d}}};
    for (int i = 0; i < 2; ++i) r.translation[i] = -(r.linear[i][0] * a.translation[0] + r.linear[i][1] * a.translation[1]);
    return r;
}

std::string to_string(const PolyPair& p) {
    auto vars = plane_variable_names();
    return "(" + p.f.to_string(vars) + ", " + p.g.to_string(vars) + ")";
}

std::string to_string(const PlaneFactor& f) {
    std::string kind = std::holds_alternative<ElementaryFactor>(f) ? "elementary" : "affine";
    return kind + to_string(factor_pair(f));
}

LaurentPoly jacobian(const PolyPair& p) {
    return partial(p.f, 0) * partial(p.g, 1) - partial(p.f, 1) * partial(p.g, 0);
}

PlaneAutomorphism PlaneAutomorphism::from_word(std::vector<PlaneFactor> word) {
    PlaneAutomorphism a;
    for (const auto& f : word) {
        validate(f);
        a.pair_ = compose_pairs(a.pair_, factor_pair(f));
    }
    a.word_ = std::move(word);
    return a;
}

PlaneAutomorphism PlaneAutomorphism::from_pair(const PolyPair& pair) {
    PlaneAutomorphism a = from_word(jung_van_der_kulk(pair));
    if (!(a.pair_ == pair)) throw std::logic_error("decomposition does not recompose to the input pair");
    return a;
}

PlaneAutomorphism PlaneAutomorphism::inverse() const {
    std::vector<PlaneFactor> w;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(invert_factor(*it));
    return from_word(std::move(w));
}

std::array<Rational, 2> PlaneAutomorphism::apply_to_point(const std::array<Rational, 2>& p) const {
    std::vector<Rational> pt{p[0], p[1]};
    return {pair_.f.eval(pt), pair_.g.eval(pt)};
}

LaurentPoly PlaneAutomorphism::pullback(const LaurentPoly& h) const { return h.substitute({pair_.f, pair_.g}); }

PlaneAutomorphism compose(const PlaneAutomorphism& a, const PlaneAutomorphism& b) {
    std::vector<PlaneFactor> w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return PlaneAutomorphism::from_word(std::move(w));
}

PlaneAutomorphism iterate(const PlaneAutomorphism& a, std::int64_t n) {
    PlaneAutomorphism base = n < 0 ? a.inverse() : a;
    PlaneAutomorphism acc;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = compose(acc, base);
    return acc;
}

std::vector<PlaneFactor> jung_van_der_kulk(const PolyPair& input) {
    if (input.f.arity() != 2 || input.g.arity() != 2 || !input.f.is_polynomial() || !input.g.is_polynomial())
        throw InputError("plane maps need two polynomials in z, w");
    LaurentPoly j = jacobian(input);
    if (!j.is_constant() || j.is_zero())
        throw InputError("not an automorphism: Jacobian determinant " + j.to_string(plane_variable_names()) +
                         " is not a nonzero constant");
    std::vector<PlaneFactor> word;
    PolyPair cur = input;
    while (true) {
        const std::int64_t df = cur.f.total_degree(), dg = cur.g.total_degree();
        if (df <= 1 && dg <= 1) break;
        const bool reduce_f = df >= dg;
        const LaurentPoly& hi = reduce_f ? cur.f : cur.g;
        const LaurentPoly& lo = reduce_f ? cur.g : cur.f;
        const std::int64_t dh = reduce_f ? df : dg, dl = reduce_f ? dg : df;
        if (dl < 1 || dh % dl != 0)
            throw InputError("not an automorphism: degrees " + std::to_string(df) + " and " + std::to_string(dg) +
                             " do not divide");
        const std::int64_t k = dh / dl;
        LaurentPoly top = hi.homogeneous_part(dh);
        LaurentPoly lead = pow(lo.homogeneous_part(dl), static_cast<std::uint64_t>(k));
        const auto& [e0, c0] = *lead.terms().begin();
        Rational c = top.coeff(e0) / c0;
        if (!(top == lead * c))
            throw InputError("not an automorphism: degree reduction stalls at degree " + std::to_string(dh));
        ElementaryFactor e;
        e.p = UPoly::monomial(c, static_cast<std::size_t>(k));
        LaurentPoly sub = pow(lo, static_cast<std::uint64_t>(k)) * c;
        if (reduce_f) {
            word.emplace_back(e);
            cur.f -= sub;
        } else {
            word.emplace_back(swap_factor());
            word.emplace_back(e);
            word.emplace_back(swap_factor());
            cur.g -= sub;
        }
    }
    AffineFactor a;
    for (int i = 0; i < 2; ++i) {
        const LaurentPoly& c = i == 0 ? cur.f : cur.g;
        a.linear[i][0] = c.coeff({1, 0});
        a.linear[i][1] = c.coeff({0, 1});
        a.translation[i] = c.constant_term();
    }
    if (a.det() == 0) throw InputError("not an automorphism: affine remainder is singular");
    word.emplace_back(a);
    return normalize_word(std::move(word));
}

std::vector<PlaneFactor> normalize_word(std::vector<PlaneFactor> word) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<PlaneFactor> out;
        for (auto& f : word) {
            if (auto a = as_affine(f); a && std::holds_alternative<ElementaryFactor>(f)) {
                f = *a;
                changed = true;
            }
            if (is_identity(f)) {
                changed = true;
                continue;
            }
            if (!out.empty()) {
                PlaneFactor& last = out.back();
                if (is_affine_kind(last) && is_affine_kind(f)) {
                    last = compose_affine(std::get<AffineFactor>(last), std::get<AffineFactor>(f));
                    changed = true;
                    if (is_identity(last)) out.pop_back();
                    continue;
                }
                auto tl = as_triangular(last), tf = as_triangular(f);
                if (tl && tf) {
                    last = compose_elementary(*tl, *tf);
                    changed = true;
                    continue;
                }
            }
            out.push_back(f);
        }
        word = std::move(out);
    }
    return word;
}

PlaneClassification classify_plane(const PlaneAutomorphism& sigma) {
    PlaneClassification c;
    std::vector<PlaneFactor> cur = normalize_word(sigma.word());
    // sigma = theta o cur o theta^-1; rotate x1 to the end while the ends can merge.
    while (cur.size() >= 2 && is_affine_kind(cur.front()) == is_affine_kind(cur.back())) {
        PlaneFactor x1 = cur.front();
        c.theta.push_back(x1);
        cur.erase(cur.begin());
        cur.push_back(x1);
        cur = normalize_word(std::move(cur));
    }
    c.reduced = cur;
    if (cur.size() >= 2) {
        c.kind = PlaneClassification::Kind::Henon;
        for (const auto& f : cur)
            if (const auto* e = std::get_if<ElementaryFactor>(&f)) c.dynamical_degree *= e->degree();
        return c;
    }
    c.kind = PlaneClassification::Kind::Elementary;
    c.elementary_conjugator = c.theta;
    if (cur.empty()) {
        c.elementary_form = ElementaryFactor{};
        return c;
    }
    if (auto t = as_triangular(cur.front())) {
        c.elementary_form = *t;
        return c;
    }
    // Non-triangular affine map: needs a rational left eigenvector of the
    // linear part to become triangular.
    const auto& a = std::get<AffineFactor>(cur.front());
    const auto& L = a.linear;
    UPoly chi(std::vector<Rational>{L[0][0] * L[1][1] - L[0][1] * L[1][0], -(L[0][0] + L[1][1]), 1});
    auto roots = rational_roots(chi);
    if (roots.empty()) return c;
    const Rational& d = roots.front();
    // r L = d r with r = (L10, d - L00); L10 != 0 here.
    std::array<Rational, 2> r{L[1][0], d - L[0][0]};
    AffineFactor phi;  // new coordinates (z', w') = (l'(z,w), r.(z,w))
    phi.linear = r[0] != 0 ? std::array<std::array<Rational, 2>, 2>{{{0, 1}, {r[0], r[1]}}}
                           : std::array<std::array<Rational, 2>, 2>{{{1, 0}, {r[0], r[1]}}};
    PlaneFactor phi_inv = invert_factor(phi);
    AffineFactor conj = compose_affine(compose_affine(phi, a), std::get<AffineFactor>(phi_inv));
    c.elementary_form = as_triangular(conj);
    c.elementary_conjugator.push_back(phi_inv);
    return c;
}

}  // namespace oredyn
