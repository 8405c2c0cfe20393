// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

#include "growth/growth.hpp"
#include "ore_rings/ore_rings.hpp"

#include <random>

using namespace oredyn;

namespace {

const LaurentPoly U = LaurentPoly::variable(2, 0);
const LaurentPoly V = LaurentPoly::variable(2, 1);
LaurentPoly C(long c) { return LaurentPoly(2, Rational(c)); }
LaurentPoly mon(long a, long b) { return LaurentPoly::monomial({a, b}); }

MonomialAutomorphism mono(IntegerMatrix m, std::vector<Rational> l = {}) {
    return MonomialAutomorphism(std::move(m), std::move(l));
}

const MonomialAutomorphism LORENZ = mono({{2, 1}, {1, 1}});
const MonomialAutomorphism SWAP = mono({{0, 1}, {1, 0}});
const MonomialAutomorphism ID = MonomialAutomorphism::identity(2);

OreElement T(std::int64_t n) { return OreElement::t_power(2, n); }
OreElement S(const LaurentPoly& s, std::int64_t n = 0) { return OreElement::term(s, n); }

LaurentPoly random_laurent(std::mt19937_64& rng, int terms = 3) {
    std::uniform_int_distribution<long> e(-2, 2), c(-3, 3);
    LaurentPoly f(2);
    for (int i = 0; i < terms; ++i) f.add_term({e(rng), e(rng)}, Rational(c(rng)));
    return f;
}

OreElement random_element(std::mt19937_64& rng, std::int64_t lo = -2, std::int64_t hi = 2) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    OreElement x(2);
    for (int i = 0; i < 2; ++i) x.add_term(random_laurent(rng, 2), d(rng));
    return x;
}

}  // namespace

TEST_CASE("Ore product examples") {
    CHECK(ore_mul(T(1), S(U), LORENZ) == S(U * U * V, 1));
    CHECK(ore_mul(S(U, 1), S(V, 1), LORENZ) == S(U * U * V, 2));
    auto back = ore_mul(T(-1), S(U, 1), LORENZ);
    CHECK(back == S(LORENZ.inverse().apply(U), 0));
    CHECK(back == S(mon(1, -1), 0));
    CHECK(ore_mul(T(-1), ore_mul(S(LORENZ.apply(U)), T(1), LORENZ), LORENZ) == S(U));
    CHECK(ore_mul(T(1), T(-1), LORENZ) == T(0));
    CHECK(S(U, 1).to_string() == "(u)*t");
}

TEST_CASE("Ore ring axioms") {
    std::mt19937_64 rng(20261015);
    for (const auto& sigma : {LORENZ, SWAP, mono({{0, 1}, {1, -1}}, {2, Rational(-1, 3)})}) {
        for (int i = 0; i < 100; ++i) {
            auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
            CHECK(ore_mul(ore_mul(a, b, sigma), c, sigma) == ore_mul(a, ore_mul(b, c, sigma), sigma));
        }
        for (int i = 0; i < 50; ++i) {
            auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
            CHECK(ore_mul(a, b + c, sigma) == ore_mul(a, b, sigma) + ore_mul(a, c, sigma));
            CHECK(ore_mul(b + c, a, sigma) == ore_mul(b, a, sigma) + ore_mul(c, a, sigma));
        }
        std::uniform_int_distribution<long> e(-4, 4);
        for (int i = 0; i < 50; ++i) {
            LaurentPoly s = mon(e(rng), e(rng));
            CHECK(ore_mul(ore_mul(T(1), S(s), sigma), T(-1), sigma) == S(sigma.apply(s)));
            CHECK(ore_mul(T(1), S(s), sigma) == ore_mul(S(sigma.apply(s)), T(1), sigma));
        }
    }
}

TEST_CASE("ideal specs and primality") {
    auto uv1 = make_ideal_spec({subtorus({1, 1}, 1)}, SWAP);
    CHECK(is_homogeneous_prime(uv1).prime);
    REQUIRE(uv1.generators.size() == 1);
    CHECK(uv1.generators[0] == U * V - C(1));

    std::vector<IdealComponent> axes{subtorus({1, 0}, 1), subtorus({0, 1}, 1)};
    auto swap_axes = make_ideal_spec(axes, SWAP);
    auto cert = is_homogeneous_prime(swap_axes);
    CHECK(cert.prime);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].size() == 2);
    auto id_axes = make_ideal_spec(axes, ID);
    CHECK_FALSE(is_homogeneous_prime(id_axes).prime);
    CHECK(is_homogeneous_prime(id_axes).cycles.size() == 2);

    CHECK_THROWS_AS(make_ideal_spec({subtorus({1, 0}, 1)}, SWAP), InputError);
    CHECK_THROWS_AS(subtorus({2, 2}, 1), InputError);
    // The Lorenz 3-cycle of 2-torsion points.
    TorusPoint a{Rational(-1), Rational(-1)}, b{Rational(-1), Rational(1)}, c{Rational(1), Rational(-1)};
    auto cyc = make_ideal_spec({PointComponent{a}, PointComponent{b}, PointComponent{c}}, LORENZ);
    CHECK(is_homogeneous_prime(cyc).prime);
    // sigma(uv) = 2uv moves {uv = 1} to {uv = 1/2}.
    CHECK_THROWS_AS(make_ideal_spec({subtorus({1, 1}, 1)}, mono({{0, 1}, {1, 0}}, {2, 1})), InputError);
}

TEST_CASE("homogeneous ideal membership") {
    auto p = HomogeneousIdeal::from_invariant(make_ideal_spec({subtorus({1, 1}, 1)}, SWAP), OreRing::T);
    CHECK(p.contains(S(U * V - C(1), 3)));
    CHECK_FALSE(p.contains(S(U, 1)));
    CHECK(p.contains(S((U * V - C(1)) * (U + V * V), -2) + S(mon(-1, -1) - C(1), 5)));

    auto axes = HomogeneousIdeal::from_invariant(
        make_ideal_spec({subtorus({1, 0}, 1), subtorus({0, 1}, 1)}, SWAP), OreRing::T);
    CHECK(axes.contains(S((U - C(1)) * (V - C(1)))));
    CHECK_FALSE(axes.contains(S(U - C(1))));

    auto q = HomogeneousIdeal::u_family(PointComponent{{Rational(1), Rational(1)}}, 2);
    CHECK(q.contains(T(1)));
    CHECK(q.contains(S(U - C(1))));
    CHECK_FALSE(q.contains(S(U)));
    CHECK_FALSE(q.contains(T(-1)));
}

TEST_CASE("homogeneous ideals are two-sided") {
    std::mt19937_64 rng(7);
    struct Case {
        MonomialAutomorphism sigma;
        std::vector<IdealComponent> comps;
    };
    std::vector<Case> cases{{SWAP, {subtorus({1, 1}, 1)}},
                            {SWAP, {subtorus({1, 0}, 1), subtorus({0, 1}, 1)}},
                            {mono({{1, 1}, {0, 1}}), {subtorus({1, 0}, 3)}},
                            {LORENZ, {PointComponent{{Rational(1), Rational(1)}}}}};
    for (const auto& cs : cases) {
        auto spec = make_ideal_spec(cs.comps, cs.sigma);
        auto ideal = HomogeneousIdeal::from_invariant(spec, OreRing::T);
        for (int i = 0; i < 20; ++i) {
            OreElement a(2);
            for (const auto& g : spec.generators) a += ore_mul(S(g), random_element(rng), cs.sigma);
            for (const auto& g : spec.generators) a += ore_mul(random_element(rng), S(g), cs.sigma);
            REQUIRE(ideal.contains(a));
            auto x = random_element(rng);
            CHECK(ideal.contains(ore_mul(a, x, cs.sigma)));
            CHECK(ideal.contains(ore_mul(x, a, cs.sigma)));
        }
    }
    auto q = HomogeneousIdeal::u_family(subtorus({1, -1}, 1), 2);
    for (int i = 0; i < 20; ++i) {
        OreElement a = S((U - V) * random_laurent(rng)) + random_element(rng, 1, 3);
        REQUIRE(q.contains(a));
        auto x = random_element(rng, 0, 2);
        CHECK(q.contains(ore_mul(a, x, LORENZ)));
        CHECK(q.contains(ore_mul(x, a, LORENZ)));
    }
}

TEST_CASE("GK profile examples") {
    auto shear = gk_profile(mono({{1, 1}, {0, 1}}), standard_triangle(), 2);
    CHECK(shear.dims == std::vector<Integer>{3, 7});
    CHECK(oracle::brute_force_lattice_count(minkowski_sum(standard_triangle(),
                                                          standard_triangle().transformed({{1, 1}, {0, 1}}))) == 7);
    auto id = gk_profile(ID, standard_triangle(), 12);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(id.dims[n - 1] == Integer((n + 1) * (n + 2) / 2));
    CHECK(id.kind == GKProfile::Kind::Polynomial);
    CHECK(id.fitted_degree == 2);
    auto lor = gk_profile(LORENZ, standard_triangle(), 10);
    CHECK(lor.kind == GKProfile::Kind::Exponential);
    CHECK(lor.base >= 1.5);
    CHECK_THROWS_AS(gk_profile(LORENZ, LatticePolygon::from_vertices({{1, 1}, {2, 1}, {1, 2}}), 3), InputError);
}

TEST_CASE("GK profile agrees with growth type on the corpus") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        auto sigma = mono(m);
        auto prof = gk_profile(sigma, standard_triangle(), 12);
        auto q = is_quasi_unipotent(m);
        CHECK((prof.kind == GKProfile::Kind::Polynomial) == q.holds);
        if (!q.holds) CHECK(prof.kind == GKProfile::Kind::Exponential);
        if (q.holds) CHECK(prof.fitted_degree <= growth_data(sigma).j + 2);
        for (std::size_t i = 1; i < prof.dims.size(); ++i) CHECK(prof.dims[i] > prof.dims[i - 1]);
        for (std::size_t a = 1; a <= 4; ++a)
            for (std::size_t b = 1; b <= 4; ++b) CHECK(prof.dims[a + b - 1] >= prof.dims[a - 1]);
        CHECK(oracle::brute_force_lattice_count(prof.polytope) == 3);
    }
}
