#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liouville/integrate/integrate.hpp"

namespace liouville::detail {

inline TowerElem frac(int level, const TPoly& n, const TPoly& d) { return TowerElem::fraction(level, n, d); }
inline TowerElem poly_elem(int level, const TPoly& p) { return TowerElem::polynomial(level, p); }

/// res_t(d, a - z*dd) as a polynomial in z over K_{level-1}.
TPoly residue_resultant(const TPoly& d, const TPoly& a, const TPoly& dd);

/// gcd over Q(i) of the polynomials in z obtained by expanding the
/// coefficients of r in a basis of monomials of the tower: its roots are
/// the constant roots of r. Zero when r is zero.
Poly<GaussRat> constant_root_poly(const TPoly& r);
std::vector<long> positive_integer_roots(const TPoly& r);

/// (D s, s) for s = x and, at each level k <= level, s = t_k for a
/// logarithm and s = b_k for t_k = exp(b_k).
std::vector<std::pair<TowerElem, TowerElem>> derivative_basis(const Tower& t, int level);

struct LimitedIntegral {
    enum class Status { Found, NoSolution, NonElementary } status;
    GaussRat c;
    TowerElem s;
    std::optional<Certificate> cause;
};

/// Constant c and s in K_level with w = D(s) + c*eta; eta may be zero.
LimitedIntegral limited_integrate(const Tower& t, int level, const TowerElem& w, const TowerElem& eta);

/// s in K_level with D(s) = w.
std::optional<TowerElem> integrate_in_field(const Tower& t, int level, const TowerElem& w);

struct LogDerivativeWitness {
    long m;
    TowerElem z;
};

/// Integer m and z in K_level, z != 0, with alpha = m*eta + D(z)/z; eta may be zero.
std::optional<LogDerivativeWitness> log_derivative_integer(const Tower& t, int level, const TowerElem& alpha,
                                                           const TowerElem& eta);

/// Normal and special parts of p in t_level: p = normal * t^k at an
/// exponential level, p = normal * 1 otherwise.
std::pair<TPoly, int> split_special(const Tower& t, int level, const TPoly& p);

}  // namespace liouville::detail
