#include "liouville/integrate/integrate.hpp"

#include <cstdlib>
#include <map>

#include "liouville/syntax/printer.hpp"
#include "support.hpp"

namespace liouville {

using detail::frac;
using detail::poly_elem;

int max_degree() {
    const char* v = std::getenv("LIOUVILLE_MAX_DEGREE");
    if (!v || !*v) return 64;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 1000000) return 64;
    return static_cast<int>(n);
}

namespace {

bool reads_negative(const TowerElem& f) {
    if (f.is_zero()) return false;
    const GaussRat c = f.numerator().base_lc();
    return c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0);
}

Certificate with_assumptions(const Tower& t, Certificate c) {
    c.assumptions = t.assumptions();
    return c;
}

Certificate log_obstruction(const Tower& t, int level, int power, const TowerElem& coeff,
                            std::optional<Certificate> cause) {
    Certificate c;
    c.kind = CertificateKind::LogDegreeObstruction;
    c.level = level;
    c.power = power;
    Expr g = t.generator_expr(level);
    std::string where = power == 0 ? "constant term in " + pretty_print(g)
                                   : "coefficient of " + pretty_print(power == 1 ? g : Expr::binary(Op::Pow, g, Expr::constant(GaussRat(power))));
    c.detail = where + ", " + t.str(coeff);
    c.g = coeff;
    if (cause) c.cause = std::make_shared<const Certificate>(std::move(*cause));
    return c;
}

IntegrationResult integrate_exp_laurent(const Tower& t, int l, const std::map<int, TowerElem>& laurent) {
    std::vector<LiouvilleForm> parts;
    const TowerElem& eta = t.eta(l);
    for (const auto& [k, p] : laurent) {
        if (p.is_zero()) continue;
        if (k == 0) {
            IntegrationResult r = integrate(t, p);
            if (auto* c = std::get_if<Certificate>(&r)) return *c;
            parts.push_back(std::get<LiouvilleForm>(std::move(r)));
            continue;
        }
        const TowerElem f = TowerElem(k) * eta;
        RdeResult r = solve_rde(t, l - 1, f, p);
        if (!r.solution) {
            Certificate c;
            c.kind = CertificateKind::RischOdeUnsolvable;
            c.level = l;
            c.detail = ode_string(t, f, p);
            c.f = f;
            c.g = p;
            c.power = k;
            c.trace = std::move(r.trace);
            return c;
        }
        parts.push_back({*r.solution * TowerElem::generator(l).pow(k), {}});
    }
    return combine(t, parts);
}

IntegrationResult integrate_impl(const Tower& t, const TowerElem& f) {
    if (f.is_zero()) return LiouvilleForm{};
    const int l = f.level();
    if (l < 0) return LiouvilleForm{f * TowerElem::generator(0), {}};
    const LevelKind kind = t.kind(l);
    const TPoly num = f.num(l), den = f.den(l);

    TPoly poly_part, a, d;
    std::map<int, TowerElem> laurent;
    if (kind == LevelKind::Exp) {
        auto [d1, v] = detail::split_special(t, l, den);
        TPoly n = num;
        if (v > 0 && d1.degree() > 0) {
            auto e = extended_gcd(TPoly::monomial(TowerElem(1), v), d1);
            // 1 = s t^v + u d1, so num/(t^v d1) = num s/d1 + num u/t^v
            TPoly nu = num * e.t;
            for (int k = 0; k <= nu.degree(); ++k) laurent[k - v] += nu.coeff(k);
            n = num * e.s;
        } else if (v > 0) {
            for (int k = 0; k <= num.degree(); ++k) laurent[k - v] += num.coeff(k);
            n = TPoly();
        }
        auto [q, r] = divmod(n, d1);
        for (int k = 0; k <= q.degree(); ++k) laurent[k] += q.coeff(k);
        a = r;
        d = d1;
    } else {
        auto [q, r] = divmod(num, den);
        poly_part = q;
        a = r;
        d = den;
    }

    std::vector<LiouvilleForm> parts;
    if (!a.is_zero()) {
        HermiteResult h = hermite_reduce(t, l, a, d);
        parts.push_back({h.rational_part, {}});
        if (!h.num.is_zero()) {
            const TPoly g = gcd(h.num, h.den);
            const TPoly hn = exact_quotient(h.num, g), hd = exact_quotient(h.den, g);
            auto rt = rothstein_trager(t, l, hn, hd);
            if (auto* c = std::get_if<Certificate>(&rt)) return *c;
            LiouvilleForm logs{TowerElem(), std::get<std::vector<LogTerm>>(std::move(rt))};
            // Each v is monic in t of degree k. D v / v is proper in t at a log
            // level and equals k*eta plus a proper part at an exp level, so the
            // residue part leaves -eta * sum(lambda * k) below the top level.
            if (kind == LevelKind::Exp) {
                GaussRat s;
                for (const auto& term : logs.logs) {
                    const int k = term.arg.coeff(0).num(l).degree();
                    if (term.lambda.is_exact()) {
                        s += GaussRat(k) * term.lambda.exact();
                    } else {
                        const Poly<GaussRat>& q = term.lambda.root_of().poly;
                        s -= GaussRat(k) * q.coeff(q.degree() - 1);
                    }
                }
                laurent[0] -= TowerElem(s) * t.eta(l);
            }
            parts.push_back(std::move(logs));
        }
    }

    IntegrationResult rest;
    switch (kind) {
        case LevelKind::Base: {
            std::vector<TowerElem> v{TowerElem()};
            for (int k = 0; k <= poly_part.degree(); ++k) v.push_back(poly_part.coeff(k) / TowerElem(k + 1));
            rest = LiouvilleForm{poly_elem(0, TPoly(std::move(v))), {}};
            break;
        }
        case LevelKind::Log: rest = integrate_polypart_log(t, l, poly_part); break;
        case LevelKind::Exp: rest = integrate_exp_laurent(t, l, laurent); break;
    }
    if (auto* c = std::get_if<Certificate>(&rest)) return *c;
    parts.push_back(std::get<LiouvilleForm>(std::move(rest)));
    return combine(t, parts);
}

}  // namespace

IntegrationResult integrate_polypart_log(const Tower& t, int l, const TPoly& p) {
    if (p.is_zero()) return LiouvilleForm{};
    const int n = p.degree();
    if (n + 1 > max_degree())
        throw DegreeLimitError("degree " + std::to_string(n + 1) + " exceeds LIOUVILLE_MAX_DEGREE=" +
                               std::to_string(max_degree()));
    const TowerElem& eta = t.eta(l);
    std::vector<TowerElem> q(static_cast<size_t>(n + 2));
    TowerElem beta;  // known part of q_{k+1}
    for (int k = n; k >= 1; --k) {
        TowerElem w = p.coeff(k) - TowerElem(k + 1) * beta * eta;
        auto li = detail::limited_integrate(t, l - 1, w, eta);
        if (li.status != detail::LimitedIntegral::Status::Found)
            return log_obstruction(t, l, k, w, std::move(li.cause));
        // D(q_k) + (k+1) c_{k+1} eta = w with q_{k+1} = beta + c_{k+1}
        q[static_cast<size_t>(k + 1)] = beta + TowerElem(li.c / GaussRat(k + 1));
        beta = li.s;
    }
    q[1] = beta;
    TowerElem w = p.coeff(0) - beta * eta;
    IntegrationResult r = integrate(t, w);
    if (auto* c = std::get_if<Certificate>(&r)) return log_obstruction(t, l, 0, w, *c);
    LiouvilleForm base = std::get<LiouvilleForm>(std::move(r));
    base.r0 += poly_elem(l, TPoly(std::move(q)));
    return base;
}

LiouvilleForm combine(const Tower& t, const std::vector<LiouvilleForm>& parts) {
    (void)t;
    LiouvilleForm out;
    std::vector<std::pair<GaussRat, TowerElem>> exact;
    for (const auto& part : parts) {
        out.r0 += part.r0;
        for (const auto& term : part.logs) {
            if (!term.lambda.is_exact()) {
                out.logs.push_back(term);
                continue;
            }
            if (term.lambda.exact().is_zero()) continue;
            TowerElem arg = term.exact_arg();
            if (arg.is_constant()) continue;
            arg *= TowerElem(arg.numerator().base_lc().inverse());
            exact.emplace_back(term.lambda.exact(), std::move(arg));
        }
    }
    // merge u = v^k into v
    auto top_degree = [](const TowerElem& u, int lv) {
        return u.numerator().degree_in(lv) - u.denominator().degree_in(lv);
    };
    std::vector<bool> gone(exact.size(), false);
    for (size_t i = 0; i < exact.size(); ++i) {
        if (gone[i]) continue;
        for (size_t j = 0; j < exact.size(); ++j) {
            if (j == i || gone[j]) continue;
            const TowerElem& u = exact[j].second;
            const TowerElem& v = exact[i].second;
            if (u.level() != v.level()) continue;
            const int lv = u.level();
            const int du = top_degree(u, lv), dv = top_degree(v, lv);
            long k = 0;
            if (u == v) {
                k = 1;
            } else if (dv != 0 && du % dv == 0 && std::abs(du / dv) >= 1 && std::abs(du / dv) <= 64) {
                k = du / dv;
                if (!(v.pow(k) == u)) k = 0;
            }
            if (k == 0) continue;
            exact[i].first += GaussRat(k) * exact[j].first;
            gone[j] = true;
        }
    }
    std::vector<LogTerm> merged;
    for (size_t i = 0; i < exact.size(); ++i)
        if (!gone[i] && !exact[i].first.is_zero()) merged.push_back(LogTerm::exact(exact[i].first, exact[i].second));
    merged.insert(merged.end(), out.logs.begin(), out.logs.end());
    out.logs = std::move(merged);
    return out;
}

IntegrationResult integrate(const Tower& t, const TowerElem& f) {
    IntegrationResult r = integrate_impl(t, f);
    if (auto* c = std::get_if<Certificate>(&r)) return with_assumptions(t, std::move(*c));
    return r;
}

std::string ode_string(const Tower& t, const TowerElem& f, const TowerElem& g) {
    Expr lhs = Expr::variable("y'");
    if (!f.is_zero()) {
        const bool neg = reads_negative(f);
        const TowerElem af = neg ? -f : f;
        Expr term = af.is_one() ? Expr::variable("y") : t.to_expr(af) * Expr::variable("y");
        lhs = neg ? lhs - term : lhs + term;
    }
    return pretty_print(lhs) + " = " + t.str(g);
}

}  // namespace liouville
