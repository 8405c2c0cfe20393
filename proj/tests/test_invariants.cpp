// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

#include "growth/growth.hpp"
#include "invariants/invariants.hpp"

using namespace oredyn;

namespace {

const LaurentPoly Z = LaurentPoly::variable(2, 0);
const LaurentPoly W = LaurentPoly::variable(2, 1);
const LaurentPoly U = LaurentPoly::variable(2, 0);
const LaurentPoly V = LaurentPoly::variable(2, 1);
LaurentPoly C(long c) { return LaurentPoly(2, Rational(c)); }

MonomialAutomorphism mono(IntegerMatrix m, std::vector<Rational> l = {}) {
    return MonomialAutomorphism(std::move(m), std::move(l));
}

PlaneAutomorphism plane(LaurentPoly f, LaurentPoly g) { return PlaneAutomorphism::from_pair({std::move(f), std::move(g)}); }

}  // namespace

TEST_CASE("coprime base") {
    CHECK(coprime_base({12, 18}) == std::vector<Integer>{2, 3});
    CHECK(coprime_base({6, 10, 15}) == std::vector<Integer>{2, 3, 5});
    CHECK(coprime_base({4, 8, -1, 1}) == std::vector<Integer>{2});
    CHECK(coprime_base({}).empty());
}

TEST_CASE("invariant monomial examples") {
    auto swap = invariant_monomials(mono({{0, 1}, {1, 0}}), 1);
    REQUIRE(swap.invariants().size() == 1);
    CHECK(swap.invariants()[0] == U * V);

    auto shear = invariant_monomials(mono({{1, 1}, {0, 1}}), 1);
    REQUIRE(shear.invariants().size() == 1);
    CHECK(shear.invariants()[0] == U);

    for (std::int64_t m = 1; m <= 6; ++m) {
        auto lor = invariant_monomials(mono({{2, 1}, {1, 1}}), m);
        CHECK(lor.fixed_lattice.empty());
        CHECK_FALSE(lor.has_invariant());
    }

    auto rot = invariant_monomials(mono({{0, -1}, {1, 0}}), 4);
    CHECK(rot.invariant_lattice.size() == 2);
    CHECK_FALSE(invariant_monomials(mono({{0, -1}, {1, 0}}), 2).has_invariant());
}

TEST_CASE("invariant monomials with coefficients") {
    // sigma(uv) = 2uv: the fixed direction carries a non-torsion scalar.
    auto two = invariant_monomials(mono({{0, 1}, {1, 0}}, {2, 1}), 1);
    CHECK(two.fixed_lattice.size() == 1);
    CHECK(two.fixed_scalars[0] == 2);
    CHECK_FALSE(two.has_invariant());
    auto neg = invariant_monomials(mono({{0, 1}, {1, 0}}, {-1, 1}), 1);
    REQUIRE(neg.invariant_lattice.size() == 1);
    CHECK(neg.invariants()[0] == U * U * V * V);
    // Scalars 4 and 1/2 on the two basis directions of the identity: u v^2 is invariant.
    auto id = invariant_monomials(mono({{1, 0}, {0, 1}}, {4, Rational(1, 2)}), 1);
    REQUIRE(id.invariant_lattice.size() == 1);
    CHECK(id.invariants()[0] == U * V * V);
    // 6 and 3/2: 6^a (3/2)^b = 2^(a-b) 3^(a+b), trivial only at 0.
    CHECK_FALSE(invariant_monomials(mono({{1, 0}, {0, 1}}, {6, Rational(3, 2)}), 1).has_invariant());
    auto mix = invariant_monomials(mono({{1, 0}, {0, 1}}, {-6, Rational(-3, 2)}), 1);
    CHECK_FALSE(mix.has_invariant());
}

TEST_CASE("invariant monomials agree with brute force on the [-2,2] corpus") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        auto sigma = mono(m);
        bool any = false;
        for (std::int64_t k : {1, 2, 3, 4, 6, 12}) {
            bool has = invariant_monomials(sigma, k).has_invariant();
            CHECK(has == oracle::has_fixed_vector_in_box(matrix_power(m, k), 6));
            any = any || has;
        }
        CHECK(any == is_quasi_unipotent(m).holds);
    }
}

TEST_CASE("bounded search is sound and complete within the box") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        auto q = is_quasi_unipotent(m);
        Automorphism sigma = mono(m);
        std::int64_t k = q.holds ? q.k : 1;
        auto s = bounded_invariant_search(sigma, 2, k);
        CHECK(s.space_dimension == 25);
        if (s.found()) CHECK(invariant_monomials(as_monomial(sigma), k).has_invariant());
        if (oracle::has_fixed_vector_in_box(matrix_power(m, k), 2)) CHECK(s.found());
    }
}

TEST_CASE("bounded search on plane maps") {
    auto e = plane(Z + W * W, W);
    auto s = bounded_invariant_search(e, 1, 1);
    REQUIRE(s.invariants.size() == 1);
    CHECK(s.invariants[0].p == W);
    CHECK(s.stable_dimension == 2);

    auto h = plane(Z * Z + C(1) - W, Z);
    for (int d = 1; d <= 3; ++d)
        for (std::int64_t m = 1; m <= 2; ++m) {
            auto hs = bounded_invariant_search(h, d, m);
            CHECK_FALSE(hs.found());
            CHECK(hs.stable_dimension == 1);
        }

    auto diag = bounded_invariant_search(plane(Z * Rational(2), W * Rational(3)), 1, 1);
    CHECK_FALSE(diag.found());
    REQUIRE(diag.semi_invariants.size() == 2);
    bool saw_w = false;
    for (const auto& si : diag.semi_invariants)
        if (si.f == W) {
            saw_w = true;
            CHECK(si.eigenvalue == 3);
        }
    CHECK(saw_w);

    // (2z, 4w): w / z^2 is invariant.
    auto sq = bounded_invariant_search(plane(Z * Rational(2), W * Rational(4)), 2, 1);
    REQUIRE(sq.found());
    const auto& r = sq.invariants[0];
    CHECK((r.p * Z * Z == r.q * W || r.p * W == r.q * Z * Z));

    CHECK_THROWS_AS(bounded_invariant_search(h, 40, 2, 500), ResourceError);
}

TEST_CASE("invariant fibrations") {
    auto a = invariant_fibration(plane(Z + W * W, W));
    REQUIRE(a.has_rational_form);
    CHECK(a.h == W);
    CHECK(a.base_order == 1);
    REQUIRE(a.invariants.size() == 1);
    CHECK(a.invariants[0].p == W);

    auto b = invariant_fibration(plane(Z + W * W, -W));
    CHECK(b.base_order == 2);
    REQUIRE(b.invariants.size() == 2);
    CHECK(b.invariants[0].p == W);
    CHECK(b.invariants[0].period == 2);
    CHECK(b.invariants[1].p == W * W);
    CHECK(b.invariants[1].period == 1);

    auto c = invariant_fibration(plane(Z * Rational(2), W * Rational(3)));
    CHECK(c.base_order == 0);
    CHECK(c.invariants.empty());
    REQUIRE(c.semi_invariant);
    CHECK(c.semi_invariant->f == W);
    CHECK(c.semi_invariant->eigenvalue == 3);

    // A conjugate of (z + w^2, w) by an affine map still yields an invariant fibre function.
    auto base = PlaneAutomorphism::from_word({ElementaryFactor{1, 1, 0, UPoly::from_integers({0, 0, 1})}});
    AffineFactor t;
    t.linear = {{{1, 2}, {1, 3}}};
    t.translation = {5, -1};
    auto conj = PlaneAutomorphism::from_word({t});
    auto s = compose(compose(conj, base), conj.inverse());
    auto f = invariant_fibration(s);
    REQUIRE(f.has_rational_form);
    REQUIRE(f.invariants.size() == 1);
    CHECK(s.pullback(f.invariants[0].p) == f.invariants[0].p);
    CHECK_FALSE(f.invariants[0].p.is_constant());

    CHECK_THROWS_AS(invariant_fibration(plane(Z * Z + C(1) - W, Z)), InputError);
}

TEST_CASE("periodic divisor examples") {
    auto lor = periodic_divisors(mono({{2, 1}, {1, 1}}), 6);
    CHECK(lor.directions.empty());
    CHECK_FALSE(lor.all_directions);
    CHECK_FALSE(lor.infinitely_many);

    auto swap = periodic_divisors(mono({{0, 1}, {1, 0}}), 2);
    REQUIRE(swap.directions.size() == 2);
    CHECK(swap.directions[0].a == IntVector{1, 1});
    CHECK(swap.directions[0].sign == 1);
    CHECK(swap.directions[1].a == IntVector{1, -1});
    CHECK(swap.directions[1].sign == -1);
    CHECK(swap.all_directions);
    CHECK(swap.all_period == 2);
    CHECK(swap.infinitely_many);

    auto shear = periodic_divisors(mono({{1, 1}, {0, 1}}), 3);
    REQUIRE(shear.directions.size() == 1);
    CHECK(shear.directions[0].a == IntVector{1, 0});
    CHECK_FALSE(shear.all_directions);

    auto twisted = periodic_divisors(mono({{1, 1}, {0, 1}}, {3, 1}), 3);
    REQUIRE(twisted.directions.size() == 1);
    CHECK(twisted.directions[0].scalar == 3);
    CHECK_FALSE(twisted.infinitely_many);
}

TEST_CASE("infinitely many periodic divisors iff a power has an invariant") {
    const std::vector<std::vector<Rational>> coeff_sets{{}, {-1, 1}, {1, -1}, {2, 1}, {-1, 3}};
    const std::int64_t bound = 6;
    for (const auto& m : oracle::gl2_corpus(-2, 2))
        for (const auto& l : coeff_sets) {
            auto sigma = mono(m, l);
            auto pd = periodic_divisors(sigma, bound);
            bool upto_n = false, upto_2n = false;
            for (std::int64_t k = 1; k <= 2 * bound; ++k) {
                bool has = invariant_monomials(sigma, k).has_invariant();
                upto_2n = upto_2n || has;
                if (k <= bound) upto_n = upto_n || has;
            }
            if (pd.infinitely_many) CHECK(upto_2n);
            if (upto_n) CHECK(pd.infinitely_many);
            for (const auto& d : pd.directions) {
                IntVector img = matrix_power(m, d.period) * d.a;
                for (auto& x : img) x *= d.sign;
                CHECK(img == d.a);
            }
        }
}
