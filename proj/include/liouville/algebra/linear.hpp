#pragma once

#include <optional>
#include <vector>

#include "liouville/algebra/rational.hpp"

namespace liouville {

using Matrix = std::vector<std::vector<GaussRat>>;

/// Exact Gaussian elimination over Q(i). Returns one solution of A x = b
/// (free variables set to zero) or nullopt when the system is inconsistent.
std::optional<std::vector<GaussRat>> solve_linear(Matrix a, std::vector<GaussRat> b);

/// Determinant by fraction-free elimination over Q(i).
GaussRat determinant(Matrix a);

}  // namespace liouville
