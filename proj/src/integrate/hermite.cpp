#include "liouville/integrate/integrate.hpp"

#include "support.hpp"

namespace liouville {

// Mack's linear version, with the derivation of the tower in place of d/dt.
// Valid because d is normal, so gcd(p, D p) = 1 for its squarefree factors.
HermiteResult hermite_reduce(const Tower& t, int level, const TPoly& a, const TPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("zero denominator");
    if (a.degree() >= d.degree()) throw std::invalid_argument("hermite_reduce needs a proper fraction");
    const TowerElem inv_lc = d.lc().inverse();
    TPoly A = a.scaled(inv_lc);
    TPoly D = d.scaled(inv_lc);

    TowerElem g;
    TPoly dm = gcd(D, t.derive_poly(level, D));
    TPoly ds = exact_quotient(D, dm);
    while (dm.degree() > 0) {
        TPoly ddm = t.derive_poly(level, dm);
        TPoly dm2 = gcd(dm, ddm);
        TPoly dms = exact_quotient(dm, dm2);
        TPoly coef = -exact_quotient(ds * ddm, dm);
        auto [b, c] = solve_bezout(coef, dms, A);
        A = c - exact_quotient(t.derive_poly(level, b) * ds, dms);
        g += detail::frac(level, b, dm);
        dm = dm2;
    }
    auto [q, r] = divmod(A, ds);
    if (!q.is_zero()) throw std::logic_error("hermite reduction left a polynomial part");
    return {g, r, ds};
}

}  // namespace liouville
