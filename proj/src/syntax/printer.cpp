#include "liouville/syntax/printer.hpp"

namespace liouville {

namespace {

// Binding strength of the printed form; an operand is parenthesized when its
// strength is below what the context requires.
enum Prec : int { kTop = 0, kSum = 1, kProduct = 2, kNeg = 3, kPower = 4, kAtom = 5 };

int const_prec(const GaussRat& c) {
    if (!c.re().is_zero() && !c.im().is_zero()) return kSum;
    const Rat& part = c.im().is_zero() ? c.re() : c.im();
    if (!c.im().is_zero() && !part.abs().is_one()) return kProduct;  // "2*i", "-1/2*i"
    if (!part.is_integer()) return kProduct;                         // "1/2", "-3/4"
    return part.sign() < 0 ? kNeg : kAtom;
}

bool is_minus_one(const Expr& e) { return e.is_const() && e.value() == GaussRat(-1); }

int prec(const Expr& e) {
    switch (e.op()) {
    case Op::Const: return const_prec(e.value());
    case Op::Var: return kAtom;
    case Op::Add:
    case Op::Sub: return kSum;
    case Op::Mul: return is_minus_one(e.lhs()) && !e.rhs().is_const() ? kNeg : kProduct;
    case Op::Div: return kProduct;
    case Op::Pow: return kPower;
    default: return kAtom;
    }
}

void emit(const Expr& e, int need, std::string& out);

void emit_binary(const Expr& e, const char* sym, int lhs_need, int rhs_need, std::string& out) {
    emit(e.lhs(), lhs_need, out);
    out += sym;
    emit(e.rhs(), rhs_need, out);
}

void emit_bare(const Expr& e, std::string& out) {
    switch (e.op()) {
    case Op::Const: out += e.value().str(); return;
    case Op::Var: out += e.name(); return;
    case Op::Add: emit_binary(e, " + ", kSum, kSum + 1, out); return;
    case Op::Sub: emit_binary(e, " - ", kSum, kSum + 1, out); return;
    case Op::Mul:
        if (is_minus_one(e.lhs()) && !e.rhs().is_const()) {
            out += '-';
            emit(e.rhs(), kNeg, out);
            return;
        }
        emit_binary(e, "*", kProduct, kProduct + 1, out);
        return;
    case Op::Div: emit_binary(e, "/", kProduct, kProduct + 1, out); return;
    case Op::Pow: emit_binary(e, "^", kAtom, kNeg, out); return;
    default:
        out += function_name(e.op());
        out += '(';
        emit(e.arg(), kTop, out);
        out += ')';
        return;
    }
}

void emit(const Expr& e, int need, std::string& out) {
    if (prec(e) < need) {
        out += '(';
        emit_bare(e, out);
        out += ')';
    } else {
        emit_bare(e, out);
    }
}

}  // namespace

std::string pretty_print(const Expr& e) {
    std::string out;
    emit(e, kTop, out);
    return out;
}

Expr negate_leading(const Expr& e) {
    switch (e.op()) {
        case Op::Const: return Expr::constant(-e.value());
        case Op::Mul:
        case Op::Div: return Expr::binary(e.op(), negate_leading(e.lhs()), e.rhs());
        default: return Expr::constant(GaussRat(-1)) * e;
    }
}

}  // namespace liouville
