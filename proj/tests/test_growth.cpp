// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

#include "growth/growth.hpp"

#include <cmath>

using namespace oredyn;

namespace {

const LaurentPoly Z = LaurentPoly::variable(2, 0);
const LaurentPoly W = LaurentPoly::variable(2, 1);
LaurentPoly C(long c) { return LaurentPoly(2, Rational(c)); }

MonomialAutomorphism mono(IntegerMatrix m) { return MonomialAutomorphism(std::move(m)); }

}  // namespace

TEST_CASE("quasi-unipotence examples") {
    auto shear = is_quasi_unipotent({{1, 1}, {0, 1}});
    CHECK(shear.holds);
    CHECK(shear.k == 1);
    CHECK(shear.nilpotency_index == 2);
    auto rot = is_quasi_unipotent({{0, -1}, {1, 0}});
    CHECK(rot.holds);
    CHECK(rot.k == 4);
    CHECK_FALSE(is_quasi_unipotent({{2, 1}, {1, 1}}).holds);
    CHECK(quasi_unipotent_candidates(2) == std::vector<std::int64_t>{1, 2, 3, 4, 6});
    auto c3 = quasi_unipotent_candidates(3);
    CHECK(std::find(c3.begin(), c3.end(), 12) == c3.end());
    CHECK(std::find(c3.begin(), c3.end(), 6) != c3.end());
}

TEST_CASE("quasi-unipotence agrees with eigenvalue moduli on the [-3,3] corpus") {
    auto corpus = oracle::gl2_corpus(-3, 3);
    CHECK(corpus.size() == 232);
    for (const auto& m : corpus) {
        auto ev = oracle::eigenvalues2(m);
        bool unit = std::abs(std::abs(ev[0]) - 1) < 1e-9 && std::abs(std::abs(ev[1]) - 1) < 1e-9;
        auto q = is_quasi_unipotent(m);
        CHECK(q.holds == unit);
        CHECK(q.holds == oracle::quasi_unipotent_by_powering(m));
        CHECK(q.holds == (spectral_radius(m) == Rational(1)));
        if (q.holds) {
            // char poly divides x^k - 1 raised to the power 2.
            UPoly xk = UPoly::monomial(1, static_cast<std::size_t>(q.k)) - UPoly(1);
            CHECK((xk * xk).divmod(char_poly(m)).second.is_zero());
        }
    }
}

TEST_CASE("growth_data examples") {
    auto shear = growth_data(mono({{1, 1}, {0, 1}}));
    CHECK(shear.rho == Rational(1));
    CHECK(shear.j == 1);
    CHECK(shear.type() == GrowthType::Finite);
    auto id = growth_data(MonomialAutomorphism::identity(2));
    CHECK(id.j == 0);
    CHECK(id.rho == Rational(1));
    auto lor = growth_data(mono({{2, 1}, {1, 1}}));
    CHECK(lor.j == 0);
    CHECK(lor.type() == GrowthType::Infinite);
    CHECK(lor.rho.poly() == UPoly::from_integers({1, -3, 1}));
    CHECK(lor.rho.compare(make_rational(26, 10)) > 0);
    CHECK(lor.rho.compare(make_rational(27, 10)) < 0);
    auto jor = growth_data(mono({{0, 1}, {1, -1}}));
    CHECK(jor.type() == GrowthType::Infinite);
    // A 3x3 Jordan block gives j = 2.
    auto j3 = growth_data(mono({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(j3.j == 2);
    // Dominant eigenvalue with a 2x2 block in dimension 4.
    IntegerMatrix big{{2, 1, 1, 0}, {1, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 1, 1}};
    auto gb = growth_data(mono(big));
    CHECK(gb.j == 1);
}

TEST_CASE("growth data sandwiches matrix norms") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        auto g = growth_data(mono(m));
        double rho = g.rho.approx();
        double lo = 1e300, hi = 0;
        for (int n = -12; n <= 12; ++n) {
            if (n == 0) continue;
            int an = std::abs(n);
            double r = oracle::inf_norm(matrix_power(m, n)) / (std::pow(an, g.j) * std::pow(rho, an));
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        CHECK(lo > 0.05);
        CHECK(hi < 20);
    }
}

TEST_CASE("growth type is stable under powers") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        Automorphism s = mono(m);
        auto t = growth_type(s);
        CHECK(growth_type(iterate(s, 2)) == t);
        CHECK(growth_type(iterate(s, 3)) == t);
    }
}

TEST_CASE("plane dynamical degree") {
    auto h = PlaneAutomorphism::from_pair({Z * Z + C(1) - W, Z});
    auto d = dynamical_degree(h);
    CHECK(d.value == 2);
    CHECK(d.degrees == std::vector<int>{2, 4, 8, 16, 32});
    CHECK(d.sequence_consistent);
    CHECK(d.degrees_exact);
    CHECK(dynamical_degree(h.inverse()).value == 2);
    // The line restriction agrees with full bivariate composition at small n.
    auto h3pair = iterate(h, 3).pair();
    CHECK(h3pair.degree() == 8);

    auto e = PlaneAutomorphism::from_pair({Z + W * W, W});
    CHECK(dynamical_degree(e).value == 1);
    auto g = growth_data(e);
    CHECK(g.rho == Rational(1));
    CHECK(g.j == 0);

    auto h3 = PlaneAutomorphism::from_pair({Z * Z * Z - W, Z});
    auto h23 = compose(h, h3);
    auto d23 = dynamical_degree(h23, 3);
    CHECK(d23.value == 6);
    CHECK(d23.degrees == std::vector<int>{6, 36, 216});
    CHECK(d23.degrees_exact);
    CHECK(dynamical_degree(h23.inverse()).value == 6);

    auto gh = growth_data(h);
    CHECK(gh.rho == Rational(2));
    CHECK(gh.j == 0);
    CHECK(gh.type() == GrowthType::Infinite);
    CHECK(growth_type(Automorphism(iterate(h, 2))) == GrowthType::Infinite);
}
