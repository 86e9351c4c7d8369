#pragma once

#include <string>
#include <string_view>

#include "thinlayer/field.hpp"

namespace thinlayer {

// Parses a closed-form map in y1, y2. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'y1' | 'y2' | func '(' expr ')' | '(' expr ')'
//   func   := 'sin' | 'cos' | 'exp'
// Nothing else is accepted. The resulting field has exact derivatives.
// Throws DomainError with the offending column on malformed input.
Field2 parse_expression(std::string_view text);

}  // namespace thinlayer
