#include "liouville/tower/builder.hpp"

#include <algorithm>

#include "liouville/syntax/printer.hpp"
#include "liouville/syntax/rewrite.hpp"

namespace liouville {

namespace {

Expr monomial_expr(const Tower& t, MonomialKind kind, const TowerElem& arg) {
    return Expr::apply(kind == MonomialKind::Log ? Op::Log : Op::Exp, t.to_expr(arg));
}

Expr rat_power(Expr base, const Rat& r) {
    if (r.is_one()) return base;
    return Expr::binary(Op::Pow, std::move(base), Expr::constant(GaussRat(r)));
}

Expr scaled_expr(const Rat& r, Expr e) {
    if (r.is_one()) return e;
    return Expr::constant(GaussRat(r)) * std::move(e);
}

// Right-hand side sum_l r_l u_l, with u_l the log monomial or exp argument.
Expr linear_relation(const Tower& t, const std::vector<Rat>& r) {
    std::optional<Expr> sum;
    for (int l = 1; l <= t.top_level(); ++l) {
        const Rat& c = r[static_cast<size_t>(l - 1)];
        if (c.is_zero()) continue;
        Expr u = t.kind(l) == LevelKind::Log ? t.generator_expr(l) : t.to_expr(t.monomial(l).arg);
        Expr term = scaled_expr(c, u);
        sum = sum ? *sum + term : term;
    }
    return sum ? *sum : Expr::constant(GaussRat());
}

// prod_l w_l^{r_l}, with w_l the log argument or the exp monomial.
Expr multiplicative_relation(const Tower& t, const std::vector<Rat>& r) {
    std::optional<Expr> prod;
    for (int l = 1; l <= t.top_level(); ++l) {
        const Rat& c = r[static_cast<size_t>(l - 1)];
        if (c.is_zero()) continue;
        Expr w = t.kind(l) == LevelKind::Log ? t.to_expr(t.monomial(l).arg) : t.generator_expr(l);
        Expr factor = rat_power(w, c);
        prod = prod ? *prod * factor : factor;
    }
    return prod ? *prod : Expr::constant(GaussRat(1));
}

mpz_class common_denominator(const std::vector<Rat>& r) {
    mpz_class n = 1;
    for (const auto& c : r) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), c.denominator().get_mpz_t());
    return n;
}

}  // namespace

MonomialCheck check_monomial(const Tower& t, MonomialKind kind, const TowerElem& arg) {
    MonomialCheck out;
    const std::string name = pretty_print(monomial_expr(t, kind, arg));
    const int L = t.top_level();

    if (arg.is_constant()) {
        out.valid = false;
        GaussRat c = arg.constant();
        if (kind == MonomialKind::Exp && c.is_zero()) {
            out.relation = name + " = 1";
            out.replacement = TowerElem(1);
        } else if (kind == MonomialKind::Log && c.is_one()) {
            out.relation = name + " = 0";
            out.replacement = TowerElem();
        } else {
            out.relation = name + " is a constant outside Q(i)";
        }
        return out;
    }

    std::vector<TowerElem> basis;
    for (int l = 1; l <= L; ++l) basis.push_back(t.eta(l));
    TowerElem da = t.derive(arg);
    TowerElem target = kind == MonomialKind::Log ? da / arg : da;
    auto sol = solve_constant_combination(target, basis, true);
    if (!sol) return out;

    out.valid = false;
    std::vector<Rat> r;
    for (const auto& c : *sol) r.push_back(c.re());
    const mpz_class n = common_denominator(r);

    if (kind == MonomialKind::Exp) {
        // b - sum r_l u_l is a constant c, and exp(b) = e^c prod w_l^{r_l}
        TowerElem c = arg;
        for (int l = 1; l <= L; ++l) {
            const Rat& q = r[static_cast<size_t>(l - 1)];
            if (q.is_zero()) continue;
            TowerElem u = t.kind(l) == LevelKind::Log ? TowerElem::generator(l) : t.monomial(l).arg;
            c -= TowerElem(GaussRat(q)) * u;
        }
        Expr rhs = multiplicative_relation(t, r);
        if (!c.is_zero()) rhs = Expr::apply(Op::Exp, t.to_expr(c)) * rhs;
        out.relation = name + " = " + pretty_print(rhs);
        if (c.is_zero() && n == 1) {
            TowerElem value(1);
            for (int l = 1; l <= L; ++l) {
                const Rat& q = r[static_cast<size_t>(l - 1)];
                if (q.is_zero()) continue;
                TowerElem w = t.kind(l) == LevelKind::Log ? t.monomial(l).arg : TowerElem::generator(l);
                value *= w.pow(q.to_long());
            }
            out.replacement = value;
        } else if (c.is_zero()) {
            bool algebraic = false;
            std::vector<Expr> seeds;
            for (int l = 1; l <= L; ++l) {
                const Rat& q = r[static_cast<size_t>(l - 1)];
                if (q.is_integer()) continue;
                if (t.kind(l) == LevelKind::Log) {
                    algebraic = true;
                    break;
                }
                TowerElem u = t.monomial(l).arg * TowerElem(GaussRat(Rat(q.denominator()).inverse()));
                seeds.push_back(Expr::apply(Op::Exp, t.to_expr(u)));
            }
            if (!algebraic) out.seeds = std::move(seeds);
        }
        return out;
    }

    // log(a) = log(kappa) + sum r_l u_l, where kappa^N = a^N / prod w_l^{N r_l}
    const long big_n = n.get_si();
    TowerElem kappa_n = arg.pow(big_n);
    for (int l = 1; l <= L; ++l) {
        const Rat& q = r[static_cast<size_t>(l - 1)];
        if (q.is_zero()) continue;
        TowerElem w = t.kind(l) == LevelKind::Log ? t.monomial(l).arg : TowerElem::generator(l);
        kappa_n /= w.pow((q * Rat(big_n)).to_long());
    }
    Expr rhs = linear_relation(t, r);
    if (kappa_n.is_constant() && !kappa_n.is_one()) {
        Expr k = Expr::apply(Op::Log, Expr::constant(kappa_n.constant()));
        if (big_n != 1) k = Expr::constant(GaussRat(Rat(1, big_n))) * k;
        rhs = rhs + k;
    }
    out.relation = name + " = " + pretty_print(rhs);
    if (big_n == 1 && kappa_n.is_one()) {
        TowerElem value;
        for (int l = 1; l <= L; ++l) {
            const Rat& q = r[static_cast<size_t>(l - 1)];
            if (q.is_zero()) continue;
            TowerElem u = t.kind(l) == LevelKind::Log ? TowerElem::generator(l) : t.monomial(l).arg;
            value += TowerElem(GaussRat(q)) * u;
        }
        out.replacement = value;
    } else if (kappa_n.is_one()) {
        out.seeds.push_back(monomial_expr(t, kind, arg));
    }
    return out;
}

TowerElem TowerBuilder::add(const Expr& e) { return convert(rewrite_trig(e)); }

TowerElem TowerBuilder::monomial(MonomialKind kind, const TowerElem& arg) {
    for (int l = 1; l <= tower_.top_level(); ++l) {
        const Monomial& m = tower_.monomial(l);
        if (m.kind == kind && m.arg == arg) return TowerElem::generator(l);
    }
    MonomialCheck check = check_monomial(tower_, kind, arg);
    if (check.valid) return TowerElem::generator(tower_.push({kind, arg}));
    if (check.replacement) return *check.replacement;
    if (arg.is_constant()) throw UnsupportedError("transcendental constant: " + check.relation);
    throw DependentMonomialError(pretty_print(monomial_expr(tower_, kind, arg)), check.relation,
                                 std::move(check.seeds));
}

TowerElem TowerBuilder::convert(const Expr& e) {
    switch (e.op()) {
    case Op::Const: return TowerElem(e.value());
    case Op::Var:
        if (e.name() != tower_.variable()) throw UnsupportedError("unknown symbol '" + e.name() + "'");
        return TowerElem::generator(0);
    case Op::Add: return convert(e.lhs()) + convert(e.rhs());
    case Op::Sub: return convert(e.lhs()) - convert(e.rhs());
    case Op::Mul: return convert(e.lhs()) * convert(e.rhs());
    case Op::Div: {
        TowerElem d = convert(e.rhs());
        if (d.is_zero()) throw UnsupportedError("division by zero");
        return convert(e.lhs()) / d;
    }
    case Op::Pow: {
        const Expr& ex = e.rhs();
        if (!ex.is_const() || !ex.value().is_real()) {
            Expr as_exp = Expr::apply(Op::Exp, ex * Expr::apply(Op::Log, e.lhs()));
            return convert(as_exp);
        }
        const Rat& k = ex.value().re();
        if (!k.is_integer()) throw UnsupportedError("algebraic extension: " + pretty_print(e));
        if (!k.fits_long()) throw UnsupportedError("exponent too large: " + pretty_print(e));
        TowerElem b = convert(e.lhs());
        if (b.is_zero() && k.sign() < 0) throw UnsupportedError("division by zero");
        return b.pow(k.to_long());
    }
    case Op::Exp: return monomial(MonomialKind::Exp, convert(e.arg()));
    case Op::Log: {
        TowerElem a = convert(e.arg());
        if (a.is_zero()) throw UnsupportedError("log(0)");
        return monomial(MonomialKind::Log, a);
    }
    default: return convert(rewrite_trig(e));
    }
}

BuiltTower build_tower(const Expr& e, const std::string& variable) {
    // Monomials named in a fractional relation are registered first on a retry,
    // so that the other members become integral powers of them.
    std::vector<Expr> seeds;
    for (int attempt = 0;; ++attempt) {
        TowerBuilder b(variable);
        try {
            for (const auto& s : seeds) b.add(s);
            TowerElem f = b.add(e);
            return {b.tower(), f};
        } catch (const DependentMonomialError& err) {
            bool grew = false;
            for (const auto& s : err.seeds()) {
                if (std::find(seeds.begin(), seeds.end(), s) != seeds.end()) continue;
                seeds.insert(seeds.begin(), s);
                grew = true;
            }
            if (!grew || attempt >= 8) throw;
        }
    }
}

}  // namespace liouville
