#pragma once

#include <string>

#include "liouville/syntax/expr.hpp"

namespace liouville {

/// Infix rendering with minimal parentheses. Reparsing the output gives back
/// the same tree for every tree the parser can produce.
std::string pretty_print(const Expr& e);

/// -e with the sign moved onto the leftmost factor of a product or
/// quotient, so that it prints as -a*b rather than -(a*b).
Expr negate_leading(const Expr& e);

}  // namespace liouville
