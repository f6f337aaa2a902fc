#include "liouville/syntax/rewrite.hpp"

namespace liouville {

namespace {

Expr c(GaussRat v) { return Expr::constant(std::move(v)); }
Expr exp_of(Expr e) { return Expr::apply(Op::Exp, std::move(e)); }
Expr log_of(Expr e) { return Expr::apply(Op::Log, std::move(e)); }

const GaussRat kI = GaussRat::imaginary_unit();

// sqrt(1 - u^2), left as a fractional power for the tower builder to reject.
Expr root_one_minus_square(const Expr& u) {
    return Expr::binary(Op::Pow, c(1) - Expr::binary(Op::Pow, u, c(2)), c(GaussRat(Rat(1, 2))));
}

}  // namespace

Expr rewrite_trig(const Expr& e) {
    switch (e.op()) {
    case Op::Const:
    case Op::Var: return e;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: return Expr::binary(e.op(), rewrite_trig(e.lhs()), rewrite_trig(e.rhs()));
    case Op::Pow: {
        Expr base = rewrite_trig(e.lhs());
        Expr expo = rewrite_trig(e.rhs());
        if (!expo.contains_variable()) {
            GaussRat k;
            try {
                k = evaluate_constant(expo);
            } catch (const UnsupportedError&) {
                throw UnsupportedError("unsupported power");
            }
            if (k.is_real()) return Expr::binary(Op::Pow, std::move(base), c(k));
            return exp_of(c(k) * log_of(std::move(base)));
        }
        return exp_of(std::move(expo) * log_of(std::move(base)));
    }
    case Op::Exp:
    case Op::Log: return Expr::apply(e.op(), rewrite_trig(e.arg()));
    default: break;
    }

    Expr u = rewrite_trig(e.arg());
    Expr ep = exp_of(c(kI) * u);
    Expr em = exp_of(c(-kI) * u);
    switch (e.op()) {
    case Op::Sin: return (ep - em) / c(GaussRat(Rat(0), Rat(2)));
    case Op::Cos: return (ep + em) / c(2);
    case Op::Tan: return (ep - em) / (c(kI) * (ep + em));
    case Op::Cot: return c(kI) * (ep + em) / (ep - em);
    case Op::Arctan:
        return c(GaussRat(Rat(0), Rat(-1, 2))) * log_of((c(1) + c(kI) * u) / (c(1) - c(kI) * u));
    case Op::Arccot: return c(GaussRat(Rat(0), Rat(-1, 2))) * log_of((u + c(kI)) / (u - c(kI)));
    case Op::Arcsin: return c(-kI) * log_of(c(kI) * u + root_one_minus_square(u));
    case Op::Arccos: return c(-kI) * log_of(u + c(kI) * root_one_minus_square(u));
    default: throw std::logic_error("rewrite_trig: unhandled tag");
    }
}

}  // namespace liouville
