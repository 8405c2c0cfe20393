// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dynamics/dynamics.hpp"
#include "growth/growth.hpp"
#include "ore_rings/ore_rings.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oredyn {

enum class Verdict { Yes, No, Unknown };
enum class DMVerdict { Holds, Fails, Unknown };
std::string to_string(Verdict v);
std::string to_string(DMVerdict v);

/// A rule: when every precondition holds among the facts, field takes value.
struct Rule {
    std::string id;
    std::string statement;
    std::vector<std::pair<std::string, std::string>> preconditions;
    std::string field;
    std::string value;
};

const std::vector<Rule>& rule_table();
const Rule* find_rule(const std::string& id);

struct RuleApplication {
    std::string rule;
    std::string statement;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string field;
    std::string value;
};

struct RegistryEntry {
    std::string name;
    std::string citation;
    /// Cited facts, e.g. "U.primitive" -> "no".
    std::map<std::string, std::string> facts;
};

/// Exact-match lookup on the normalized description.
std::optional<RegistryEntry> known_results_registry(const Automorphism& sigma);

struct DMOptions {
    OrbitOptions orbits;
    /// Period bound for the periodic-divisor check against cited facts.
    std::int64_t divisor_bound = 6;
};

struct DMReport {
    static constexpr const char* kHeader =
        "Verdicts concern the base change to an uncountable algebraically closed field of characteristic 0. "
        "Invariant functions and dense-orbit certificates are computed over Q and are stable under that base change.";

    OreRing ring = OreRing::T;
    std::string family;
    std::string sigma;
    GrowthData growth;
    OrbitClassification orbits;
    Verdict primitive = Verdict::Unknown, locally_closed = Verdict::Unknown, rational = Verdict::Unknown;
    std::map<std::string, std::string> unknown_reasons;
    DMVerdict dm = DMVerdict::Unknown;
    std::string dm_break;
    std::vector<RuleApplication> trace;
    std::map<std::string, std::string> facts;
    std::optional<RegistryEntry> registry;
    /// Cited facts that disagree with computed ones.
    std::vector<std::string> registry_alarms;
};

DMReport analyze_T(const Automorphism& sigma, const DMOptions& options = {});
DMReport analyze_U(const Automorphism& sigma, const DMOptions& options = {});

/// Re-checks every trace entry against the rule table and the stored facts,
/// and that every Yes/No field and every Holds/Fails verdict is traced.
bool replay_rule_trace(const DMReport& report, std::string* error = nullptr);

}  // namespace oredyn
