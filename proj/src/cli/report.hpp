// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/automorphism.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oredyn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "oredyn-report/1";

struct Caps {
    int depth = 12;
    int degree_bound = 3;
    std::int64_t period_cap = 6;
    std::int64_t torsion_bound = 6;

    static constexpr int kMaxDepth = 40;
    static constexpr int kMaxDegreeBound = 6;
    static constexpr std::int64_t kMaxPeriodCap = 24;
    static constexpr std::int64_t kMaxTorsionBound = 64;

    /// Throws ResourceError naming the first cap above its limit.
    void validate() const;
};

/// Caps given explicitly; unset fields keep the lower layer's value.
struct CapOverrides {
    std::optional<int> depth, degree_bound;
    std::optional<std::int64_t> period_cap, torsion_bound;
    Caps apply(Caps base) const;
};

struct InputSpec {
    std::string name;
    std::string family;
    Automorphism sigma;
    CapOverrides options;
};

/// Parses the JSON input format. Throws InputError (ParseError with a byte
/// offset for malformed JSON or polynomials).
InputSpec parse_input(std::string_view text);

const std::vector<std::string>& commands();

/// Runs one command. Throws InputError or ResourceError.
Json run_command(const std::string& command, const InputSpec& spec, const Caps& caps);

/// Wraps a result with the schema, command, input and caps.
Json make_document(const std::string& command, const InputSpec& spec, const Caps& caps, Json result);
Json make_error_document(const std::string& command, const std::string& source, const std::string& kind,
                         const std::string& cap, const std::string& message);

/// Human-readable rendering of a document.
std::string render_text(const Json& document);

}  // namespace oredyn
