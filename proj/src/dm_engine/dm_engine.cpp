// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "dm_engine/dm_engine.hpp"

#include "invariants/invariants.hpp"

#include <algorithm>

namespace oredyn {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(DMVerdict v) {
    switch (v) {
        case DMVerdict::Holds: return "holds";
        case DMVerdict::Fails: return "fails";
        case DMVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

const std::vector<Rule>& rule_table() {
    static const std::vector<Rule> rules{
        {"T.primitive.dense",
         "T is primitive iff sigma has a dense orbit",
         {{"ring", "T"}, {"orbit_status", "dense_orbit_exists"}},
         "primitive", "yes"},
        {"T.primitive.no-dense",
         "T is primitive iff sigma has a dense orbit",
         {{"ring", "T"}, {"orbit_status", "no_dense_orbit"}},
         "primitive", "no"},
        {"U.primitive.good-dense",
         "when sigma has good dense orbits, U is primitive iff sigma has a dense orbit",
         {{"ring", "U"}, {"good_dense_orbits", "yes"}, {"orbit_status", "dense_orbit_exists"}},
         "primitive", "yes"},
        {"U.primitive.no-dense",
         "when sigma has good dense orbits, U is primitive iff sigma has a dense orbit",
         {{"ring", "U"}, {"good_dense_orbits", "yes"}, {"orbit_status", "no_dense_orbit"}},
         "primitive", "no"},
        {"U.primitive.cited",
         "cited result for this automorphism: U is not primitive",
         {{"ring", "U"}, {"good_dense_orbits", "no"}, {"registry.U.primitive", "no"}},
         "primitive", "no"},
        {"height-one.finite",
         "(0) is locally closed iff there are finitely many sigma-periodic irreducible hypersurfaces",
         {{"max_irreducibles", "finite"}},
         "locally_closed", "yes"},
        {"height-one.countable",
         "(0) is locally closed iff there are finitely many sigma-periodic irreducible hypersurfaces",
         {{"max_irreducibles", "countably_infinite"}},
         "locally_closed", "no"},
        {"height-one.uncountable",
         "(0) is locally closed iff there are finitely many sigma-periodic irreducible hypersurfaces",
         {{"max_irreducibles", "uncountable"}},
         "locally_closed", "no"},
        {"rational.dense",
         "with a dense orbit sigma has no nonconstant invariant rational function, so (0) is rational",
         {{"orbit_status", "dense_orbit_exists"}},
         "rational", "yes"},
        {"rational.invariant",
         "a nonconstant invariant of some power of sigma gives an invariant of sigma, so (0) is not rational",
         {{"orbit_status", "no_dense_orbit"}},
         "rational", "no"},
        {"dm.finite-growth",
         "automorphisms of finite growth type satisfy the Dixmier-Moeglin equivalence",
         {{"growth_type", "finite"}},
         "dm", "holds"},
        {"dm.break.primitive-not-lc",
         "a primitive ideal that is not locally closed breaks the equivalence",
         {{"primitive", "yes"}, {"locally_closed", "no"}},
         "dm", "fails"},
        {"dm.break.rational-not-primitive",
         "a rational ideal that is not primitive breaks the equivalence",
         {{"rational", "yes"}, {"primitive", "no"}},
         "dm", "fails"},
        {"dm.break.lc-not-primitive",
         "a locally closed ideal that is not primitive breaks the equivalence",
         {{"locally_closed", "yes"}, {"primitive", "no"}},
         "dm", "fails"},
        {"dm.plane.infinite-growth",
         "for plane automorphisms T satisfies the equivalence iff sigma has finite growth type",
         {{"ring", "T"}, {"family", "plane"}, {"growth_type", "infinite"}},
         "dm", "fails"},
    };
    return rules;
}

const Rule* find_rule(const std::string& id) {
    for (const auto& r : rule_table())
        if (r.id == id) return &r;
    return nullptr;
}

namespace {

const std::map<std::string, std::string> kBreaks{
    {"dm.break.primitive-not-lc", "primitive but not locally closed"},
    {"dm.break.rational-not-primitive", "rational but not primitive"},
    {"dm.break.lc-not-primitive", "locally closed but not primitive"},
    {"dm.plane.infinite-growth", "infinite growth type on the affine plane"},
};

bool satisfied(const Rule& r, const std::map<std::string, std::string>& facts) {
    for (const auto& [k, v] : r.preconditions) {
        auto it = facts.find(k);
        if (it == facts.end() || it->second != v) return false;
    }
    return true;
}

// First rule in table order that concludes field and fires.
bool apply_first(DMReport& rep, const std::string& field) {
    for (const auto& r : rule_table()) {
        if (r.field != field || !satisfied(r, rep.facts)) continue;
        rep.trace.push_back({r.id, r.statement, r.preconditions, r.field, r.value});
        rep.facts[field] = r.value;
        return true;
    }
    return false;
}

Verdict verdict_of(const std::string& v) {
    if (v == "yes") return Verdict::Yes;
    if (v == "no") return Verdict::No;
    return Verdict::Unknown;
}

bool good_dense_orbits(const DMReport& rep) {
    if (rep.growth.type() == GrowthType::Finite) return true;
    return rep.orbits.max_irreducibles == IrreducibleCount::Finite ||
           rep.orbits.max_irreducibles == IrreducibleCount::Uncountable;
}

void check_registry(DMReport& rep, const Automorphism& sigma, const DMOptions& options) {
    if (!rep.registry) return;
    const std::string prefix = rep.ring == OreRing::T ? "T." : "U.";
    for (const auto& [key, cited] : rep.registry->facts) {
        std::string computed;
        if (key == "periodic_curves" && is_monomial(sigma)) {
            auto pd = periodic_divisors(as_monomial(sigma), options.divisor_bound);
            computed = pd.directions.empty() && !pd.all_directions ? "none" : "some";
        } else if (key == "periodic_points") {
            computed = to_string(rep.orbits.max_irreducibles);
            if (computed == "unknown") continue;
        } else if (key.rfind(prefix, 0) == 0) {
            auto field = key.substr(prefix.size());
            auto it = rep.facts.find(field);
            if (it == rep.facts.end() || it->second == "unknown") continue;
            // The cited value filled the field; not an independent check.
            if (!rep.trace.empty() && std::any_of(rep.trace.begin(), rep.trace.end(), [&](const auto& t) {
                    return t.field == field && t.rule.find(".cited") != std::string::npos;
                }))
                continue;
            computed = it->second;
        } else {
            continue;
        }
        if (computed != cited)
            rep.registry_alarms.push_back(key + ": cited " + cited + ", computed " + computed);
    }
}

DMReport analyze(const Automorphism& sigma, OreRing ring, const DMOptions& options) {
    DMReport rep;
    rep.ring = ring;
    rep.family = is_monomial(sigma) ? "monomial" : "plane";
    rep.sigma = describe(sigma);
    rep.growth = growth_data(sigma);
    rep.orbits = classify_orbits(sigma, options.orbits);
    rep.registry = known_results_registry(sigma);

    auto& f = rep.facts;
    f["ring"] = ring == OreRing::T ? "T" : "U";
    f["family"] = rep.family;
    f["growth_type"] = to_string(rep.growth.type());
    f["orbit_status"] = to_string(rep.orbits.status);
    f["max_irreducibles"] = to_string(rep.orbits.max_irreducibles);
    if (ring == OreRing::U) f["good_dense_orbits"] = good_dense_orbits(rep) ? "yes" : "no";
    if (rep.registry)
        for (const auto& [k, v] : rep.registry->facts) f["registry." + k] = v;

    if (!apply_first(rep, "primitive")) {
        f["primitive"] = "unknown";
        if (rep.orbits.status == OrbitStatus::Undecided)
            rep.unknown_reasons["primitive"] = "dense orbit undecided: " + rep.orbits.reason;
        else
            rep.unknown_reasons["primitive"] =
                "sigma lacks good dense orbits and no criterion decides whether it is special";
    }
    if (!apply_first(rep, "locally_closed")) {
        f["locally_closed"] = "unknown";
        rep.unknown_reasons["locally_closed"] = "the number of periodic irreducible hypersurfaces is undetermined";
    }
    if (!apply_first(rep, "rational")) {
        f["rational"] = "unknown";
        rep.unknown_reasons["rational"] = "existence of an invariant rational function is undecided";
    }
    rep.primitive = verdict_of(f["primitive"]);
    rep.locally_closed = verdict_of(f["locally_closed"]);
    rep.rational = verdict_of(f["rational"]);

    if (apply_first(rep, "dm")) {
        const auto& last = rep.trace.back();
        rep.dm = last.value == "holds" ? DMVerdict::Holds : DMVerdict::Fails;
        if (auto it = kBreaks.find(last.rule); it != kBreaks.end()) rep.dm_break = it->second;
    } else {
        f["dm"] = "unknown";
        rep.unknown_reasons["dm"] = "no rule settles the equivalence for this ring";
    }
    check_registry(rep, sigma, options);
    return rep;
}

}  // namespace

std::optional<RegistryEntry> known_results_registry(const Automorphism& sigma) {
    if (!is_monomial(sigma)) return std::nullopt;
    const auto& m = as_monomial(sigma);
    if (!m.has_trivial_coeffs()) return std::nullopt;
    if (m.matrix() == IntegerMatrix{{0, 1}, {1, -1}})
        return RegistryEntry{"jordan",
                             "u -> v, v -> u*v^-1: no periodic curves, countably many periodic points, "
                             "and the skew polynomial ring is not primitive",
                             {{"U.primitive", "no"},
                              {"periodic_curves", "none"},
                              {"periodic_points", "countably_infinite"}}};
    if (m.matrix() == IntegerMatrix{{2, 1}, {1, 1}})
        return RegistryEntry{"lorenz",
                             "u -> u^2*v, v -> u*v: the skew Laurent ring is primitive but (0) is not locally closed",
                             {{"T.dm", "fails"}, {"T.primitive", "yes"}, {"T.locally_closed", "no"}}};
    return std::nullopt;
}

DMReport analyze_T(const Automorphism& sigma, const DMOptions& options) {
    return analyze(sigma, OreRing::T, options);
}

DMReport analyze_U(const Automorphism& sigma, const DMOptions& options) {
    return analyze(sigma, OreRing::U, options);
}

bool replay_rule_trace(const DMReport& report, std::string* error) {
    auto fail = [&](std::string msg) {
        if (error) *error = std::move(msg);
        return false;
    };
    std::map<std::string, std::string> concluded;
    for (const auto& t : report.trace) {
        const Rule* r = find_rule(t.rule);
        if (!r) return fail("unknown rule " + t.rule);
        if (t.inputs != r->preconditions || t.field != r->field || t.value != r->value || t.statement != r->statement)
            return fail("trace entry " + t.rule + " differs from the rule table");
        if (!satisfied(*r, report.facts)) return fail("preconditions of " + t.rule + " do not hold");
        auto it = report.facts.find(t.field);
        if (it == report.facts.end() || it->second != t.value)
            return fail(t.rule + " concludes " + t.field + "=" + t.value + " but the report says otherwise");
        if (concluded.count(t.field)) return fail("field " + t.field + " concluded twice");
        concluded[t.field] = t.value;
    }
    const std::pair<std::string, std::string> fields[] = {{"primitive", to_string(report.primitive)},
                                                          {"locally_closed", to_string(report.locally_closed)},
                                                          {"rational", to_string(report.rational)},
                                                          {"dm", to_string(report.dm)}};
    for (const auto& [field, value] : fields) {
        bool traced = concluded.count(field) && concluded[field] == value;
        if (value != "unknown" && !traced) return fail("field " + field + " is not backed by the trace");
        if (value == "unknown" && concluded.count(field)) return fail("field " + field + " traced but unknown");
    }
    return true;
}

}  // namespace oredyn
