// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

#include "automorphisms/monomial.hpp"
#include "automorphisms/plane.hpp"

#include <random>

using namespace oredyn;

namespace {

const LaurentPoly Z = LaurentPoly::variable(2, 0);
const LaurentPoly W = LaurentPoly::variable(2, 1);
LaurentPoly C(long c) { return LaurentPoly(2, Rational(c)); }

MonomialAutomorphism lorenz() { return MonomialAutomorphism(IntegerMatrix{{2, 1}, {1, 1}}); }
MonomialAutomorphism swap_map() { return MonomialAutomorphism(IntegerMatrix{{0, 1}, {1, 0}}); }

PlaneAutomorphism henon() { return PlaneAutomorphism::from_pair({Z * Z + C(1) - W, Z}); }

ElementaryFactor elem(long alpha, long beta, long gamma, std::vector<long> p) {
    ElementaryFactor e;
    e.alpha = alpha;
    e.beta = beta;
    e.gamma = gamma;
    e.p = UPoly::from_integers(p);
    return e;
}

AffineFactor aff(long a, long b, long c, long d, long t0 = 0, long t1 = 0) {
    AffineFactor f;
    f.linear = {{{a, b}, {c, d}}};
    f.translation = {t0, t1};
    return f;
}

PlaneFactor random_factor(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> small(-2, 2), coin(0, 1);
    if (coin(rng)) {
        long alpha = 0, beta = 0;
        while (alpha == 0) alpha = small(rng);
        while (beta == 0) beta = small(rng);
        std::vector<long> p{small(rng), small(rng), small(rng)};
        if (coin(rng)) p.push_back(small(rng));
        return elem(alpha, beta, small(rng), p);
    }
    while (true) {
        AffineFactor a = aff(small(rng), small(rng), small(rng), small(rng), small(rng), small(rng));
        if (a.det() != 0) return a;
    }
}

TorusPoint random_torsion_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> order(1, 6), ex(0, 5), sc(1, 3), coin(0, 1);
    TorusPoint p;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = make_rational(sc(rng), sc(rng));
        if (coin(rng)) s = -s;
        p.emplace_back(s, order(rng), ex(rng));
    }
    return p;
}

MonomialAutomorphism random_monomial(std::mt19937_64& rng) {
    auto corpus = oracle::gl2_corpus(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    std::uniform_int_distribution<long> c(-3, 3);
    std::vector<Rational> lam;
    for (int i = 0; i < 2; ++i) {
        long x = 0;
        while (x == 0) x = c(rng);
        lam.push_back(make_rational(x, 1 + (c(rng) + 3) % 2));
    }
    return MonomialAutomorphism(corpus[pick(rng)], lam);
}

}  // namespace

TEST_CASE("monomial construction validates determinant and coefficients") {
    CHECK_NOTHROW(MonomialAutomorphism(IntegerMatrix{{2, 1}, {1, 0}}));
    CHECK_THROWS_AS(MonomialAutomorphism(IntegerMatrix{{2, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(MonomialAutomorphism(IntegerMatrix{{1, 0}, {0, 1}}, {1, 0}), InputError);
    CHECK_THROWS_AS(MonomialAutomorphism(IntegerMatrix{{1, 0}, {0, 1}}, {1}), InputError);
    CHECK(lorenz().to_string() == "u -> u^2*v, v -> u*v");
}

TEST_CASE("monomial compose examples") {
    CHECK(compose(swap_map(), swap_map()) == MonomialAutomorphism::identity(2));
    CHECK(compose(lorenz(), lorenz()).matrix() == IntegerMatrix{{5, 3}, {3, 2}});
    CHECK(iterate(MonomialAutomorphism(IntegerMatrix{{1, 1}, {0, 1}}), 5).matrix() == IntegerMatrix{{1, 5}, {0, 1}});
    CHECK(iterate(lorenz(), -1).matrix() == IntegerMatrix{{1, -1}, {-1, 2}});
    CHECK(iterate(lorenz(), 0) == MonomialAutomorphism::identity(2));
}

TEST_CASE("monomial action on Laurent polynomials") {
    auto u = LaurentPoly::variable(2, 0), v = LaurentPoly::variable(2, 1);
    CHECK(lorenz().apply(u) == u * u * v);
    CHECK(lorenz().apply(v) == u * v);
    MonomialAutomorphism s({{0, 1}, {1, 0}}, {2, make_rational(1, 2)});
    CHECK(s.apply(u * v) == u * v);
    CHECK(s.apply(u) == v * Rational(2));
    // inverse undoes the action, including coefficients.
    auto f = u * u - v * Rational(3) + LaurentPoly::variable(2, 0, -1);
    CHECK(s.inverse().apply(s.apply(f)) == f);
    CHECK(s.apply(s.inverse().apply(f)) == f);
}

TEST_CASE("apply_to_point examples") {
    CHECK(lorenz().apply_to_point({TorusCoord(-1), TorusCoord(-1)}) == TorusPoint{TorusCoord(-1), TorusCoord(1)});
    for (auto m : oracle::gl2_corpus(-1, 1)) {
        MonomialAutomorphism s(m);
        CHECK(s.apply_to_point({TorusCoord(1), TorusCoord(1)}) == TorusPoint{TorusCoord(1), TorusCoord(1)});
    }
    TorusCoord z3 = TorusCoord::root_of_unity(3, 1);
    CHECK(swap_map().apply_to_point({z3, TorusCoord(1)}) == TorusPoint{TorusCoord(1), z3});
}

TEST_CASE("monomial compose is associative and functorial") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto a = random_monomial(rng), b = random_monomial(rng), c = random_monomial(rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
    for (int i = 0; i < 10; ++i) {
        auto a = random_monomial(rng);
        for (int n = -8; n <= 8; ++n) CHECK(iterate(a, n).matrix() == matrix_power(a.matrix(), n));
        CHECK(compose(iterate(a, 3), iterate(a, -3)) == MonomialAutomorphism::identity(2));
    }
}

TEST_CASE("point action is contravariant") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        auto s = random_monomial(rng), t = random_monomial(rng);
        TorusPoint p = random_torsion_point(rng, 2);
        CHECK(compose(s, t).apply_to_point(p) == t.apply_to_point(s.apply_to_point(p)));
        // Ring action matches: f(apply(s, p)) = s(f)(p).
        LaurentPoly f = LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1, -2);
        TorusPoint q = s.apply_to_point(p);
        LaurentPoly sf = s.apply(f);
        const auto& [e, c] = *sf.terms().begin();
        TorusCoord lhs = TorusCoord(c) * p[0].pow(e[0]) * p[1].pow(e[1]);
        TorusCoord rhs = q[0] * q[1].pow(-2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("plane compose and iterate examples") {
    auto e = PlaneAutomorphism::from_word({elem(1, 1, 0, {0, 0, 1})});
    auto sw = PlaneAutomorphism::from_word({aff(0, 1, 1, 0)});
    CHECK(compose(e, sw).pair() == PolyPair{W + Z * Z, Z});
    auto h2 = iterate(henon(), 2);
    CHECK(h2.pair().f.total_degree() == 4);
    auto hi = henon().inverse();
    CHECK(compose(henon(), hi).pair() == identity_pair());
    CHECK(compose(hi, henon()).pair() == identity_pair());
    CHECK(iterate(henon(), -1).pair() == hi.pair());
}

TEST_CASE("jung_van_der_kulk examples") {
    auto w1 = jung_van_der_kulk({Z + W * W, W});
    REQUIRE(w1.size() == 1);
    CHECK(std::holds_alternative<ElementaryFactor>(w1[0]));
    auto w2 = jung_van_der_kulk({Z * Z + C(1) - W, Z});
    CHECK(w2.size() == 2);
    CHECK(PlaneAutomorphism::from_word(w2).pair() == PolyPair{Z * Z + C(1) - W, Z});
    CHECK(jung_van_der_kulk(identity_pair()).empty());
    CHECK_THROWS_AS(jung_van_der_kulk({Z * Z, W}), InputError);
    CHECK_THROWS_AS(jung_van_der_kulk({Z + W * W, W + Z * Z}), InputError);
}

TEST_CASE("jung_van_der_kulk round trip on random words") {
    std::mt19937_64 rng(17);
    int nontrivial = 0;
    for (int i = 0; i < 40; ++i) {
        std::vector<PlaneFactor> word;
        int len = 1 + i % 4;
        for (int k = 0; k < len; ++k) word.push_back(random_factor(rng));
        auto a = PlaneAutomorphism::from_word(word);
        if (a.degree() > 1) ++nontrivial;
        auto decomposed = jung_van_der_kulk(a.pair());
        CHECK(PlaneAutomorphism::from_word(decomposed).pair() == a.pair());
        CHECK(PlaneAutomorphism::from_pair(a.pair()).pair() == a.pair());
    }
    CHECK(nontrivial >= 20);
}

TEST_CASE("plane compose is associative") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto a = PlaneAutomorphism::from_word({random_factor(rng)});
        auto b = PlaneAutomorphism::from_word({random_factor(rng)});
        auto c = PlaneAutomorphism::from_word({random_factor(rng)});
        CHECK(compose(compose(a, b), c).pair() == compose(a, compose(b, c)).pair());
    }
}

TEST_CASE("classify_plane examples") {
    auto el = PlaneAutomorphism::from_word({elem(2, 3, 1, {0, 1, 5, 1})});
    auto ce = classify_plane(el);
    CHECK(ce.kind == PlaneClassification::Kind::Elementary);
    CHECK(ce.dynamical_degree == 1);
    auto ch = classify_plane(henon());
    CHECK(ch.kind == PlaneClassification::Kind::Henon);
    CHECK(ch.dynamical_degree == 2);
    auto ca = classify_plane(PlaneAutomorphism::from_word({aff(1, 2, 3, 5, 1, 1)}));
    CHECK(ca.kind == PlaneClassification::Kind::Elementary);
}

TEST_CASE("classify_plane conjugation stability and witnesses") {
    std::mt19937_64 rng(31);
    auto h = henon();
    auto h3 = PlaneAutomorphism::from_pair({Z * Z * Z - W, Z});
    auto h23 = compose(h, h3);
    CHECK(classify_plane(h23).dynamical_degree == 6);
    for (int i = 0; i < 20; ++i) {
        PlaneFactor a = random_factor(rng);
        while (!std::holds_alternative<AffineFactor>(a)) a = random_factor(rng);
        auto th = PlaneAutomorphism::from_word({a});
        auto conj = compose(compose(th, h), th.inverse());
        auto c = classify_plane(conj);
        CHECK(c.kind == PlaneClassification::Kind::Henon);
        CHECK(c.dynamical_degree == 2);
        // The reduced word conjugates back to the input map.
        auto theta = PlaneAutomorphism::from_word(c.theta);
        auto back = compose(compose(theta, PlaneAutomorphism::from_word(c.reduced)), theta.inverse());
        CHECK(back.pair() == conj.pair());
    }
    // Conjugates of an elementary map stay elementary and expose an elementary form.
    for (int i = 0; i < 20; ++i) {
        auto e = PlaneAutomorphism::from_word({elem(1, -1, 0, {0, 0, 1})});
        auto th = PlaneAutomorphism::from_word({random_factor(rng), random_factor(rng)});
        auto conj = compose(compose(th, e), th.inverse());
        auto c = classify_plane(conj);
        CHECK(c.kind == PlaneClassification::Kind::Elementary);
        REQUIRE(c.elementary_form.has_value());
        auto cj = PlaneAutomorphism::from_word(c.elementary_conjugator);
        auto back = compose(compose(cj, PlaneAutomorphism::from_word({*c.elementary_form})), cj.inverse());
        CHECK(back.pair() == conj.pair());
    }
}

TEST_CASE("affine maps with a rational eigenvalue get triangular forms") {
    auto a = PlaneAutomorphism::from_word({aff(1, 1, 1, 0, 2, 3)});  // irrational eigenvalues
    CHECK_FALSE(classify_plane(a).elementary_form.has_value());
    auto b = PlaneAutomorphism::from_word({aff(2, 1, 3, 3, 1, -1)});  // x^2 - 5x + 3
    CHECK_FALSE(classify_plane(b).elementary_form.has_value());
    auto d = PlaneAutomorphism::from_word({aff(2, 1, 1, 2, 1, -1)});  // eigenvalues 1, 3
    auto cd = classify_plane(d);
    REQUIRE(cd.elementary_form.has_value());
    auto cj = PlaneAutomorphism::from_word(cd.elementary_conjugator);
    auto back = compose(compose(cj, PlaneAutomorphism::from_word({*cd.elementary_form})), cj.inverse());
    CHECK(back.pair() == d.pair());
}
