#pragma once

#include <string>

#include "axial/field.hpp"

namespace axial {

// Recursive-descent evaluation of
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary ('^' uint)?
//   primary:= uint | VARIABLE | '(' expr ')'
// directly in the given field.  Exponents are limited to 0..64.
FieldElement parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace axial
