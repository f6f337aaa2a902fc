#include "support.hpp"

#include <map>

#include "liouville/algebra/roots.hpp"

namespace liouville::detail {

TPoly residue_resultant(const TPoly& d, const TPoly& a, const TPoly& dd) {
    std::vector<TPoly> pd, pa;
    for (const auto& c : d.coeffs()) pd.emplace_back(c);
    const int n = std::max(a.degree(), dd.degree());
    for (int k = 0; k <= n; ++k) pa.push_back(TPoly(std::vector<TowerElem>{a.coeff(k), -dd.coeff(k)}));
    return resultant(Poly<TPoly>(std::move(pd)), Poly<TPoly>(std::move(pa)));
}

namespace {

// Adds the monomials of m (levels below `top`) scaled into column k.
void collect(const MPoly& m, std::vector<int>& exps, int k, int degree,
             std::map<std::vector<int>, std::vector<GaussRat>>& out) {
    if (m.is_zero()) return;
    if (m.is_constant()) {
        auto& row = out[exps];
        if (row.empty()) row.resize(static_cast<size_t>(degree + 1));
        row[static_cast<size_t>(k)] += m.constant();
        return;
    }
    const int l = m.level();
    const auto& c = m.poly().coeffs();
    for (size_t e = 0; e < c.size(); ++e) {
        exps[static_cast<size_t>(l)] = static_cast<int>(e);
        collect(c[e], exps, k, degree, out);
    }
    exps[static_cast<size_t>(l)] = 0;
}

}  // namespace

Poly<GaussRat> constant_root_poly(const TPoly& r) {
    if (r.is_zero()) return Poly<GaussRat>();
    const int cl = coeff_level(r);
    if (cl < 0) {
        std::vector<GaussRat> c;
        for (const auto& a : r.coeffs()) c.push_back(a.is_zero() ? GaussRat() : a.constant());
        return Poly<GaussRat>(std::move(c));
    }
    const int z = cl + 1;
    MPoly m = clear_denominators(z, r);
    const MPoly::Poly pz = m.as_poly(z);
    std::map<std::vector<int>, std::vector<GaussRat>> rows;
    std::vector<int> exps(static_cast<size_t>(z), 0);
    for (int k = 0; k <= pz.degree(); ++k) collect(pz.coeff(k), exps, k, pz.degree(), rows);
    Poly<GaussRat> g;
    for (auto& [_, row] : rows) {
        g = gcd(g, Poly<GaussRat>(std::move(row)));
        if (g.degree() == 0) break;
    }
    return g;
}

std::vector<long> positive_integer_roots(const TPoly& r) {
    std::vector<long> out;
    Poly<GaussRat> p = constant_root_poly(r);
    if (p.degree() <= 0) return out;
    for (const auto& z : gaussian_rational_roots(p))
        if (z.is_rational_integer() && z.re().sign() > 0 && z.re().fits_long()) out.push_back(z.re().to_long());
    return out;
}

std::vector<std::pair<TowerElem, TowerElem>> derivative_basis(const Tower& t, int level) {
    std::vector<std::pair<TowerElem, TowerElem>> out;
    if (level < 0) return out;
    out.emplace_back(TowerElem(1), TowerElem::generator(0));
    for (int k = 1; k <= level; ++k) {
        if (t.kind(k) == LevelKind::Log)
            out.emplace_back(t.eta(k), TowerElem::generator(k));
        else
            out.emplace_back(t.eta(k), t.monomial(k).arg);
    }
    return out;
}

LimitedIntegral limited_integrate(const Tower& t, int level, const TowerElem& w, const TowerElem& eta) {
    LimitedIntegral out{LimitedIntegral::Status::NoSolution, GaussRat(), TowerElem(), std::nullopt};
    if (level < 0) {
        if (w.is_zero()) {
            out.status = LimitedIntegral::Status::Found;
        } else if (eta.is_constant() && !eta.is_zero()) {
            out.status = LimitedIntegral::Status::Found;
            out.c = w.constant() / eta.constant();
        }
        return out;
    }
    IntegrationResult r = integrate(t, w);
    if (auto* cert = std::get_if<Certificate>(&r)) {
        out.status = LimitedIntegral::Status::NonElementary;
        out.cause = *cert;
        return out;
    }
    const auto& form = std::get<LiouvilleForm>(r);
    TowerElem logs;
    for (const auto& term : form.logs) logs += log_derivative(t, term);

    std::vector<TowerElem> basis;
    const bool with_eta = !eta.is_zero();
    if (with_eta) basis.push_back(eta);
    auto db = derivative_basis(t, level);
    for (const auto& [d, _] : db) basis.push_back(d);
    auto sol = solve_constant_combination(logs, basis);
    if (!sol) return out;

    size_t j = 0;
    if (with_eta) out.c = (*sol)[j++];
    TowerElem s = form.r0;
    for (const auto& [_, sk] : db) {
        const GaussRat& e = (*sol)[j++];
        if (!e.is_zero()) s += TowerElem(e) * sk;
    }
    if (s.level() > level) return out;
    TowerElem check = t.derive(s) - w;
    if (with_eta) check += TowerElem(out.c) * eta;
    if (!check.is_zero()) throw std::logic_error("limited integration produced a wrong witness");
    out.status = LimitedIntegral::Status::Found;
    out.s = std::move(s);
    return out;
}

std::optional<TowerElem> integrate_in_field(const Tower& t, int level, const TowerElem& w) {
    LimitedIntegral r = limited_integrate(t, level, w, TowerElem());
    if (r.status != LimitedIntegral::Status::Found) return std::nullopt;
    return r.s;
}

namespace {

std::optional<long> as_integer(const GaussRat& c) {
    if (!c.is_rational_integer() || !c.re().fits_long()) return std::nullopt;
    return c.re().to_long();
}

}  // namespace

std::optional<LogDerivativeWitness> log_derivative_integer(const Tower& t, int level, const TowerElem& alpha,
                                                           const TowerElem& eta) {
    const bool with_eta = !eta.is_zero();
    if (alpha.is_zero()) return LogDerivativeWitness{0, TowerElem(1)};
    if (level < 0) {
        // D(z)/z = 0 for constants, so alpha = m*eta.
        if (!with_eta || !eta.is_constant()) return std::nullopt;
        auto m = as_integer(alpha.constant() / eta.constant());
        if (!m) return std::nullopt;
        return LogDerivativeWitness{*m, TowerElem(1)};
    }
    IntegrationResult r = integrate(t, alpha);
    const auto* form = std::get_if<LiouvilleForm>(&r);
    if (!form) return std::nullopt;

    TowerElem z(1);
    for (const auto& term : form->logs) {
        if (!term.lambda.is_exact()) return std::nullopt;
        auto k = as_integer(term.lambda.exact());
        if (!k) return std::nullopt;
        z *= term.exact_arg().pow(*k);
    }
    std::vector<TowerElem> basis;
    if (with_eta) basis.push_back(eta);
    for (int k = 1; k <= level; ++k) basis.push_back(t.eta(k));
    auto sol = solve_constant_combination(t.derive(form->r0), basis);
    if (!sol) return std::nullopt;
    long m = 0;
    size_t j = 0;
    if (with_eta) {
        auto mm = as_integer((*sol)[j++]);
        if (!mm) return std::nullopt;
        m = *mm;
    }
    for (int k = 1; k <= level; ++k) {
        auto e = as_integer((*sol)[j++]);
        if (!e) return std::nullopt;
        if (*e == 0) continue;
        const TowerElem base = t.kind(k) == LevelKind::Exp ? TowerElem::generator(k) : t.monomial(k).arg;
        z *= base.pow(*e);
    }
    if (z.level() > level) return std::nullopt;
    TowerElem check = alpha - t.derive(z) / z;
    if (with_eta) check -= TowerElem(m) * eta;
    if (!check.is_zero()) return std::nullopt;
    return LogDerivativeWitness{m, z};
}

std::pair<TPoly, int> split_special(const Tower& t, int level, const TPoly& p) {
    if (level == 0 || t.kind(level) != LevelKind::Exp) return {p, 0};
    const int v = p.valuation();
    if (v <= 0) return {p, 0};
    std::vector<TowerElem> c(p.coeffs().begin() + v, p.coeffs().end());
    return {TPoly(std::move(c)), v};
}

}  // namespace liouville::detail
