#pragma once

#include "liouville/syntax/expr.hpp"

namespace liouville {

/// Rewrites trigonometric and inverse trigonometric functions into exp/log
/// form over Q(i), and u^v with non-constant or non-real v into
/// exp(v*log(u)). Real rational constant exponents are kept as Pow.
///
/// Throws UnsupportedError("unsupported power") for a constant exponent that
/// does not evaluate to an element of Q(i), such as 2^(1/2).
Expr rewrite_trig(const Expr& e);

}  // namespace liouville
