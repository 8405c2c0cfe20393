// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "automorphisms/monomial.hpp"
#include "automorphisms/plane.hpp"

#include <variant>

namespace oredyn {

using Automorphism = std::variant<MonomialAutomorphism, PlaneAutomorphism>;

inline bool is_monomial(const Automorphism& a) { return std::holds_alternative<MonomialAutomorphism>(a); }
inline const MonomialAutomorphism& as_monomial(const Automorphism& a) { return std::get<MonomialAutomorphism>(a); }
inline const PlaneAutomorphism& as_plane(const Automorphism& a) { return std::get<PlaneAutomorphism>(a); }

inline std::string describe(const Automorphism& a) {
    return std::visit([](const auto& x) { return x.to_string(); }, a);
}

inline Automorphism iterate(const Automorphism& a, std::int64_t n) {
    return std::visit([n](const auto& x) -> Automorphism { return iterate(x, n); }, a);
}

}  // namespace oredyn
