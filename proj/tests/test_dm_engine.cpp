// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

#include "dm_engine/dm_engine.hpp"

using namespace oredyn;

namespace {

const LaurentPoly Z = LaurentPoly::variable(2, 0);
const LaurentPoly W = LaurentPoly::variable(2, 1);
LaurentPoly C(long c) { return LaurentPoly(2, Rational(c)); }

MonomialAutomorphism mono(IntegerMatrix m, std::vector<Rational> l = {}) {
    return MonomialAutomorphism(std::move(m), std::move(l));
}
PlaneAutomorphism plane(LaurentPoly f, LaurentPoly g) { return PlaneAutomorphism::from_pair({std::move(f), std::move(g)}); }

const Automorphism LORENZ = mono({{2, 1}, {1, 1}});
const Automorphism JORDAN = mono({{0, 1}, {1, -1}});
const Automorphism SWAP = mono({{0, 1}, {1, 0}});
const Automorphism SHEAR = mono({{1, 1}, {0, 1}});
const Automorphism HENON = plane(Z * Z + C(1) - W, Z);

bool traced(const DMReport& r, const std::string& rule) {
    for (const auto& t : r.trace)
        if (t.rule == rule) return true;
    return false;
}

void require_replay(const DMReport& r) {
    std::string err;
    INFO(err);
    CHECK(replay_rule_trace(r, &err));
}

}  // namespace

TEST_CASE("Lorenz map") {
    auto t = analyze_T(LORENZ);
    CHECK(t.primitive == Verdict::Yes);
    CHECK(t.locally_closed == Verdict::No);
    CHECK(t.rational == Verdict::Yes);
    CHECK(t.dm == DMVerdict::Fails);
    CHECK(t.dm_break == "primitive but not locally closed");
    CHECK(traced(t, "dm.break.primitive-not-lc"));
    REQUIRE(t.registry);
    CHECK(t.registry->name == "lorenz");
    CHECK(t.registry_alarms.empty());
    require_replay(t);

    auto u = analyze_U(LORENZ);
    CHECK(u.primitive == Verdict::Unknown);
    CHECK(u.unknown_reasons.count("primitive"));
    CHECK(u.dm == DMVerdict::Unknown);
    require_replay(u);
}

TEST_CASE("finite growth examples hold") {
    for (const auto& s : {SWAP, SHEAR}) {
        for (auto r : {analyze_T(s), analyze_U(s)}) {
            CHECK(r.growth.type() == GrowthType::Finite);
            CHECK(r.dm == DMVerdict::Holds);
            CHECK(r.dm_break.empty());
            CHECK(traced(r, "dm.finite-growth"));
            CHECK(r.primitive == Verdict::No);
            CHECK(r.rational == Verdict::No);
            require_replay(r);
        }
    }
}

TEST_CASE("Henon map") {
    auto t = analyze_T(HENON);
    CHECK(t.family == "plane");
    CHECK(t.primitive == Verdict::Yes);
    CHECK(t.locally_closed == Verdict::No);
    CHECK(t.dm == DMVerdict::Fails);
    CHECK(t.dm_break == "primitive but not locally closed");
    CHECK_FALSE(t.registry);
    require_replay(t);

    auto u = analyze_U(HENON);
    CHECK(u.primitive == Verdict::Unknown);
    CHECK(u.rational == Verdict::Yes);
    CHECK(u.dm == DMVerdict::Unknown);
    require_replay(u);
}

TEST_CASE("Jordan map uses the cited registry") {
    auto t = analyze_T(JORDAN);
    CHECK(t.primitive == Verdict::Yes);
    CHECK(t.dm == DMVerdict::Fails);
    require_replay(t);

    auto u = analyze_U(JORDAN);
    CHECK(u.primitive == Verdict::No);
    CHECK(traced(u, "U.primitive.cited"));
    CHECK(u.rational == Verdict::Yes);
    CHECK(u.dm == DMVerdict::Fails);
    CHECK(u.dm_break == "rational but not primitive");
    CHECK(u.registry_alarms.empty());
    require_replay(u);
}

TEST_CASE("registry entries are exact matches") {
    CHECK_FALSE(known_results_registry(mono({{0, 1}, {1, -1}}, {2, 1})));
    CHECK_FALSE(known_results_registry(mono({{1, 1}, {1, 2}})));
    CHECK(known_results_registry(JORDAN)->name == "jordan");
}

TEST_CASE("replay detects tampering") {
    auto t = analyze_T(LORENZ);
    auto a = t;
    a.locally_closed = Verdict::Yes;
    CHECK_FALSE(replay_rule_trace(a));
    auto b = t;
    b.facts["orbit_status"] = "no_dense_orbit";
    CHECK_FALSE(replay_rule_trace(b));
    auto c = t;
    c.trace[0].rule = "no.such.rule";
    CHECK_FALSE(replay_rule_trace(c));
    auto d = t;
    d.trace.pop_back();
    CHECK_FALSE(replay_rule_trace(d));
}

TEST_CASE("uncountable periodic hypersurfaces give no/no/no") {
    auto r = analyze_T(mono({{1, 0}, {0, 1}}, {-1, 1}));
    CHECK(r.orbits.max_irreducibles == IrreducibleCount::Uncountable);
    CHECK(r.primitive == Verdict::No);
    CHECK(r.locally_closed == Verdict::No);
    CHECK(r.rational == Verdict::No);
    require_replay(r);
}

TEST_CASE("corpus: trichotomy, replay and power stability") {
    for (const auto& m : oracle::gl2_corpus(-2, 2)) {
        Automorphism s = mono(m);
        auto t = analyze_T(s);
        require_replay(t);
        CHECK(t.dm != DMVerdict::Unknown);
        bool finite = is_quasi_unipotent(m).holds;
        CHECK((t.dm == DMVerdict::Holds) == finite);
        if (t.dm == DMVerdict::Fails) CHECK_FALSE(t.dm_break.empty());
        // Primitive and rational agree with the dense orbit dichotomy.
        CHECK((t.primitive == Verdict::Yes) == (t.orbits.status == OrbitStatus::DenseOrbitExists));
        CHECK((t.rational == Verdict::Yes) == (t.primitive == Verdict::Yes));
        for (std::int64_t k : {2, 3}) {
            auto tk = analyze_T(iterate(s, k));
            CHECK(tk.growth.type() == t.growth.type());
            CHECK(tk.dm == t.dm);
        }
        auto u = analyze_U(s);
        require_replay(u);
        CHECK(t.registry_alarms.empty());
        CHECK(u.registry_alarms.empty());
        if (t.orbits.max_irreducibles == IrreducibleCount::Finite) CHECK(t.locally_closed == Verdict::Yes);
        if (t.orbits.max_irreducibles == IrreducibleCount::Uncountable) CHECK(t.rational == Verdict::No);
        if (t.orbits.max_irreducibles == IrreducibleCount::CountablyInfinite) CHECK(t.locally_closed == Verdict::No);
        if (finite) CHECK(u.dm == DMVerdict::Holds);
    }
}
