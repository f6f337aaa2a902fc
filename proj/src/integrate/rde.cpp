#include <sstream>

#include "liouville/integrate/integrate.hpp"
#include "support.hpp"

namespace liouville {

namespace {

using detail::frac;
using detail::poly_elem;

class Trace {
public:
    explicit Trace(std::vector<std::string>* lines) : lines_(lines) {}
    void add(int level, const std::string& s) {
        if (lines_) lines_->push_back(std::string(static_cast<size_t>(2 * depth_), ' ') + "level " + std::to_string(level) + ": " + s);
    }
    struct Nest {
        explicit Nest(Trace& t) : t_(t) { ++t_.depth_; }
        ~Nest() { --t_.depth_; }
        Trace& t_;
    };

private:
    std::vector<std::string>* lines_;
    int depth_ = 0;
};

std::optional<TowerElem> rde(const Tower& t, int m, const TowerElem& f, const TowerElem& g, Trace& tr);

bool is_exp(const Tower& t, int m) { return m > 0 && t.kind(m) == LevelKind::Exp; }

TPoly tpow(int k) { return TPoly::monomial(TowerElem(1), k); }

// Lowest Laurent order in t_m and its coefficient.
int order(const TowerElem& e, int m) { return e.num(m).valuation() - e.den(m).valuation(); }
TowerElem low_coeff(const TowerElem& e, int m) {
    const TPoly n = e.num(m), d = e.den(m);
    return n.coeff(n.valuation()) / d.coeff(d.valuation());
}

TowerElem t_power(int m, int k) {
    if (k >= 0) return TowerElem::generator(m).pow(k);
    return TowerElem::generator(m).pow(-k).inverse();
}

// Denominator of e in t_m is special: 1, or a power of t_m at an exponential level.
bool special_denominator(const Tower& t, int m, const TowerElem& e) {
    const TPoly d = e.den(m);
    if (d.degree() <= 0) return true;
    if (!is_exp(t, m)) return false;
    return d == tpow(d.degree());
}

TPoly weak_normalizer(const Tower& t, int m, const TowerElem& f) {
    const TPoly fn = f.num(m), fd = f.den(m);
    const TPoly dn = detail::split_special(t, m, fd).first;
    const TPoly g = gcd(dn, t.derive_poly(m, dn));
    const TPoly dstar = exact_quotient(dn, g);
    const TPoly d1 = exact_quotient(dstar, gcd(dstar, g));
    if (d1.degree() <= 0) return TPoly::one();
    const TPoly a = solve_bezout(exact_quotient(fd, d1), d1, fn).first;
    const TPoly dd1 = t.derive_poly(m, d1);
    TPoly q = TPoly::one();
    for (long n : detail::positive_integer_roots(detail::residue_resultant(d1, a, dd1)))
        q *= pow(gcd(a - dd1.scaled(TowerElem(n)), d1), static_cast<int>(n));
    return q;
}

struct Spde {
    TPoly b, c;
    int n;
    TPoly alpha, beta;  // q = alpha*h + beta
};

std::optional<Spde> spde(const Tower& t, int m, TPoly a, TPoly b, TPoly c, int n) {
    if (n < 0) {
        if (c.is_zero()) return Spde{TPoly(), TPoly(), 0, TPoly(), TPoly()};
        return std::nullopt;
    }
    const TPoly g = b.is_zero() ? monic(a) : gcd(a, b);
    if (!rem(c, g).is_zero()) return std::nullopt;
    a = exact_quotient(a, g);
    b = exact_quotient(b, g);
    c = exact_quotient(c, g);
    if (a.degree() == 0) {
        const TowerElem inv = a.lc().inverse();
        return Spde{b.scaled(inv), c.scaled(inv), n, TPoly::one(), TPoly()};
    }
    auto [r, z] = solve_bezout(b, a, c);
    auto sub = spde(t, m, a, b + t.derive_poly(m, a), z - t.derive_poly(m, r), n - a.degree());
    if (!sub) return std::nullopt;
    sub->alpha = a * sub->alpha;
    sub->beta = a * sub->beta + r;
    return sub;
}

std::optional<TPoly> no_cancel(const Tower& t, int m, const TPoly& b, TPoly c, int n, Trace& tr) {
    TPoly h;
    while (!c.is_zero()) {
        const int k = c.degree() - b.degree();
        if (n < 0 || k < 0 || k > n) {
            tr.add(m, "leading term needs degree " + std::to_string(k) + ", bound " + std::to_string(n));
            return std::nullopt;
        }
        TPoly p = TPoly::monomial(c.lc() / b.lc(), k);
        h += p;
        n = k - 1;
        c = c - t.derive_poly(m, p) - b * p;
    }
    return h;
}

// Dh + b h = c for b in K_{m-1}, m a monomial level.
std::optional<TPoly> cancel(const Tower& t, int m, const TPoly& b, TPoly c, int n, Trace& tr) {
    const TowerElem b0 = b.coeff(0);
    const TowerElem eta = is_exp(t, m) ? t.eta(m) : TowerElem();
    if (auto w = detail::log_derivative_integer(t, m - 1, b0, eta)) {
        // p = z t^k with D(p)/p = b, so D(p h) = p c
        TowerElem p = w->z * t_power(m, static_cast<int>(w->m));
        tr.add(m, "b = D(p)/p, integrating p*c");
        auto s = detail::integrate_in_field(t, m, p * poly_elem(m, c));
        if (!s) return std::nullopt;
        TowerElem ss = *s;
        if (w->m > 0) {
            TPoly sn = ss.num(m);
            if (ss.den(m).is_one() && sn.coeff(0).is_constant()) ss -= sn.coeff(0);
        }
        TowerElem h = ss / p;
        if (!h.is_polynomial_in(m) || h.level() > m) return std::nullopt;
        TPoly hp = h.num(m).scaled(h.den(m).lc().inverse());
        if (hp.degree() > n) return std::nullopt;
        return hp;
    }
    TPoly h;
    while (!c.is_zero()) {
        const int k = c.degree();
        if (k > n) {
            tr.add(m, "cancellation needs degree " + std::to_string(k) + ", bound " + std::to_string(n));
            return std::nullopt;
        }
        TowerElem bk = b0;
        if (is_exp(t, m)) bk += TowerElem(k) * eta;
        tr.add(m, "coefficient of t^" + std::to_string(k));
        std::optional<TowerElem> s;
        {
            Trace::Nest nest(tr);
            s = rde(t, m - 1, bk, c.lc(), tr);
        }
        if (!s) return std::nullopt;
        TPoly p = TPoly::monomial(*s, k);
        h += p;
        n = k - 1;
        c = c - b * p - t.derive_poly(m, p);
        if (c.degree() >= k) throw std::logic_error("cancellation step did not lower the degree");
    }
    return h;
}

int degree_bound(const Tower& t, int m, const TPoly& a, const TPoly& b, const TPoly& c, Trace& tr) {
    const int da = a.degree(), db = b.degree(), dc = c.degree();
    const TowerElem alpha = b.is_zero() ? TowerElem() : -b.lc() / a.lc();
    int n = 0;
    if (m == 0) {
        n = std::max(0, dc - std::max(db, da - 1));
        if (db == da - 1 && alpha.is_constant()) {
            GaussRat v = alpha.is_zero() ? GaussRat() : alpha.constant();
            if (v.is_rational_integer() && v.re().sign() >= 0 && v.re().fits_long())
                n = std::max<long>(n, v.re().to_long());
        }
    } else if (t.kind(m) == LevelKind::Log) {
        n = db > da ? std::max(0, dc - db) : std::max(0, dc - da + 1);
        if (db == da - 1) {
            auto li = detail::limited_integrate(t, m - 1, alpha, t.eta(m));
            if (li.status == detail::LimitedIntegral::Status::Found && li.c.is_rational_integer() &&
                li.c.re().fits_long())
                n = std::max<long>(n, li.c.re().to_long());
        }
        if (db == da) {
            if (auto w = detail::log_derivative_integer(t, m - 1, alpha, TowerElem())) {
                const TPoly z(w->z);
                const TPoly s = a * t.derive_poly(m, z) + b * z;
                const TowerElem beta = -s.coeff(da - 1) / (w->z * a.lc());
                auto li = detail::limited_integrate(t, m - 1, beta, t.eta(m));
                if (li.status == detail::LimitedIntegral::Status::Found && li.c.is_rational_integer() &&
                    li.c.re().fits_long())
                    n = std::max<long>(n, li.c.re().to_long());
            }
        }
    } else {
        n = std::max(0, dc - std::max(db, da));
        if (da == db) {
            if (auto w = detail::log_derivative_integer(t, m - 1, alpha, t.eta(m))) n = std::max<long>(n, w->m);
        }
    }
    tr.add(m, "degree bound " + std::to_string(n));
    if (n > max_degree())
        throw DegreeLimitError("degree bound " + std::to_string(n) + " exceeds LIOUVILLE_MAX_DEGREE=" +
                               std::to_string(max_degree()));
    return n;
}

std::optional<TowerElem> rde(const Tower& t, int m, const TowerElem& f, const TowerElem& g, Trace& tr) {
    if (g.is_zero()) return TowerElem();
    if (m < 0) {
        if (f.is_zero()) return std::nullopt;
        return g / f;
    }
    if (f.is_zero()) {
        tr.add(m, "f = 0, integrating g");
        return detail::integrate_in_field(t, m, g);
    }

    // y = z/qw with f weakly normalized
    const TPoly qw = weak_normalizer(t, m, f);
    const TowerElem qwe = poly_elem(m, qw);
    const TowerElem f1 = qw.is_one() ? f : f - t.derive(qwe) / qwe;
    const TowerElem g1 = qwe * g;

    // z = q/h with q having a special denominator only
    const TPoly dn = detail::split_special(t, m, f1.den(m)).first;
    const TPoly en = detail::split_special(t, m, g1.den(m)).first;
    const TPoly p = gcd(dn, en);
    const TPoly h = exact_quotient(gcd(en, t.derive_poly(m, en)), gcd(p, t.derive_poly(m, p)));
    const TowerElem he = poly_elem(m, h), dne = poly_elem(m, dn);
    TowerElem a = dne * he;
    TowerElem b = a * f1 - dne * t.derive(he);
    TowerElem c = a * he * g1;
    if (!special_denominator(t, m, c)) {
        tr.add(m, "denominator of " + t.str(g) + " cannot be cleared");
        return std::nullopt;
    }

    // q = Q t^-ns at an exponential level
    int ns = 0;
    if (is_exp(t, m)) {
        const int na = order(a, m), nb = b.is_zero() ? na + 1 : order(b, m), nc = order(c, m);
        ns = std::max(0, std::min(na, nb) - nc);
        if (na == nb) {
            TowerElem alpha = -low_coeff(b, m) / low_coeff(a, m);
            if (auto w = detail::log_derivative_integer(t, m - 1, alpha, t.eta(m))) ns = std::max<long>(ns, -w->m);
        }
        if (ns > max_degree())
            throw DegreeLimitError("pole order bound " + std::to_string(ns) + " exceeds LIOUVILLE_MAX_DEGREE=" +
                                   std::to_string(max_degree()));
        if (ns > 0) {
            b -= TowerElem(ns) * t.eta(m) * a;
            c *= t_power(m, ns);
        }
        int lo = 0;
        for (const TowerElem* e : {&a, &b, &c})
            if (!e->is_zero()) lo = std::min(lo, order(*e, m));
        if (lo < 0) {
            const TowerElem s = t_power(m, -lo);
            a *= s;
            b *= s;
            c *= s;
        }
    }
    const TPoly ap = a.num(m), bp = b.num(m), cp = c.num(m);
    if (!a.den(m).is_one() || !b.den(m).is_one() || !c.den(m).is_one())
        throw std::logic_error("risch equation not polynomial after denominator bounds");

    const int n = degree_bound(t, m, ap, bp, cp, tr);
    auto red = spde(t, m, ap, bp, cp, n);
    if (!red) {
        tr.add(m, "no polynomial solution of degree <= " + std::to_string(n));
        return std::nullopt;
    }
    std::optional<TPoly> hsol;
    if (red->c.is_zero()) {
        hsol = TPoly();
    } else if (red->n < 0) {
        hsol = std::nullopt;
    } else if (m == 0) {
        if (!red->b.is_zero()) {
            hsol = no_cancel(t, m, red->b, red->c, red->n, tr);
        } else {
            std::vector<TowerElem> v{TowerElem()};
            for (int k = 0; k <= red->c.degree(); ++k) v.push_back(red->c.coeff(k) / TowerElem(k + 1));
            TPoly hp(std::move(v));
            if (hp.degree() <= red->n) hsol = hp;
        }
    } else if (red->b.degree() > 0) {
        hsol = no_cancel(t, m, red->b, red->c, red->n, tr);
    } else {
        hsol = cancel(t, m, red->b, red->c, red->n, tr);
    }
    if (!hsol) return std::nullopt;

    TowerElem y = poly_elem(m, red->alpha * *hsol + red->beta);
    if (ns > 0) y *= t_power(m, -ns);
    y = y / he / qwe;
    if (!(t.derive(y) + f * y - g).is_zero()) throw std::logic_error("risch equation solution fails to verify");
    return y;
}

}  // namespace

RdeResult solve_rde(const Tower& t, int level, const TowerElem& f, const TowerElem& g) {
    RdeResult r;
    Trace tr(&r.trace);
    tr.add(level, "solving " + ode_string(t, f, g));
    r.solution = rde(t, level, f, g, tr);
    if (!r.solution) tr.add(level, "no solution");
    return r;
}

}  // namespace liouville
