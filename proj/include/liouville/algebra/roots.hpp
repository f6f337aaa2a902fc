#pragma once

#include <complex>
#include <vector>

#include "liouville/algebra/poly.hpp"
#include "liouville/algebra/rational.hpp"

namespace liouville {

/// All complex roots (with multiplicity) from the eigenvalues of the
/// companion matrix, polished by a few Newton steps.
std::vector<std::complex<double>> numeric_roots(const Poly<GaussRat>& p);

/// The distinct roots of p lying in Q(i). Candidates come from the numeric
/// roots scaled by the leading coefficient of the integral primitive form
/// and rounded to Gaussian integers; each one is confirmed by exact evaluation.
std::vector<GaussRat> gaussian_rational_roots(const Poly<GaussRat>& p);

}  // namespace liouville
