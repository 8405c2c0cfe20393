// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/laurent.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace oredyn {

/// Parse failure at a 0-based character offset.
class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& msg)
        : InputError(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := power ('*' power)*
///   power   := atom ['^' ['-'] integer]
///   atom    := number ['/' number] | variable | '(' expr ')'
/// Negative exponents are allowed on monomials only. Whitespace is ignored.
LaurentPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace oredyn
