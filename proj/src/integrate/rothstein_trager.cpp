#include "liouville/algebra/roots.hpp"
#include "liouville/integrate/algext.hpp"
#include "liouville/integrate/integrate.hpp"
#include "support.hpp"

namespace liouville {

namespace {

// v(alpha, t) = sum_j c_j(alpha) t^j regrouped as sum_k v_k(t) alpha^k.
TPoly regroup(int level, const APoly& v, int alpha_degree) {
    std::vector<TowerElem> out;
    for (int k = 0; k < alpha_degree; ++k) {
        std::vector<TowerElem> c;
        for (const auto& cj : v.coeffs()) c.push_back(cj.poly().coeff(k));
        out.push_back(detail::poly_elem(level, TPoly(std::move(c))));
    }
    return TPoly(std::move(out));
}

}  // namespace

std::variant<std::vector<LogTerm>, Certificate> rothstein_trager(const Tower& t, int level, const TPoly& a,
                                                                 const TPoly& d) {
    std::vector<LogTerm> logs;
    if (a.is_zero()) return logs;
    const TPoly dd = t.derive_poly(level, d);
    TPoly r = detail::residue_resultant(d, a, dd);
    r = r.scaled(r.lc().inverse());
    if (coeff_level(r) >= 0) {
        Certificate c;
        c.kind = CertificateKind::ResidueNotConstant;
        c.level = level;
        c.detail = t.str(detail::frac(level, a, d));
        c.num = a;
        c.den = d;
        c.resultant = Poly<TPoly>(std::vector<TPoly>{r});
        return c;
    }
    Poly<GaussRat> rc = detail::constant_root_poly(r);
    for (const auto& sf : squarefree_decompose(rc)) {
        Poly<GaussRat> rest = sf.factor;
        for (const auto& lambda : gaussian_rational_roots(sf.factor)) {
            TPoly v = gcd(d, a - dd.scaled(TowerElem(lambda)));
            logs.push_back(LogTerm::exact(lambda, detail::poly_elem(level, v)));
            rest = exact_quotient(rest, Poly<GaussRat>(std::vector<GaussRat>{-lambda, GaussRat(1)}));
        }
        if (rest.degree() <= 0) continue;
        std::vector<AlgElem> pa, pd;
        const int n = std::max(a.degree(), dd.degree());
        for (int k = 0; k <= n; ++k)
            pa.emplace_back(TPoly(std::vector<TowerElem>{a.coeff(k), -dd.coeff(k)}), AlgElem::Modulus());
        for (const auto& c : d.coeffs()) pd.emplace_back(c);
        for (auto& [m, v] : split_gcd(rest, APoly(std::move(pd)), APoly(std::move(pa)))) {
            if (m.degree() == 1) {
                GaussRat lambda = -m.coeff(0) / m.coeff(1);
                logs.push_back(LogTerm::exact(lambda, regroup(level, v, 1).coeff(0)));
            } else {
                logs.push_back({ConstantValue{RootOf{monic(m)}}, regroup(level, v, m.degree())});
            }
        }
    }
    return logs;
}

}  // namespace liouville
