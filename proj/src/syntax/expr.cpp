#include "liouville/syntax/expr.hpp"

#include <cmath>

namespace liouville {

bool is_binary(Op op) {
    switch (op) {
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow:
        return true;
    default:
        return false;
    }
}

bool is_function(Op op) { return op != Op::Const && op != Op::Var && !is_binary(op); }

bool is_trig(Op op) { return is_function(op) && op != Op::Exp && op != Op::Log; }

std::string_view function_name(Op op) {
    switch (op) {
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Cot: return "cot";
    case Op::Arcsin: return "arcsin";
    case Op::Arccos: return "arccos";
    case Op::Arctan: return "arctan";
    case Op::Arccot: return "arccot";
    default: throw std::logic_error("not a function tag");
    }
}

Expr::Expr() : Expr(constant(GaussRat())) {}

Expr Expr::constant(GaussRat value) {
    return Expr(std::make_shared<const Node>(Node{Op::Const, std::move(value), {}, nullptr, nullptr}));
}

Expr Expr::variable(std::string name) {
    return Expr(std::make_shared<const Node>(Node{Op::Var, GaussRat(), std::move(name), nullptr, nullptr}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
    if (!is_binary(op)) throw std::logic_error("Expr::binary with non-binary tag");
    return Expr(std::make_shared<const Node>(Node{op, GaussRat(), {}, std::make_shared<const Expr>(std::move(lhs)),
                                                   std::make_shared<const Expr>(std::move(rhs))}));
}

Expr Expr::apply(Op fn, Expr arg) {
    if (!is_function(fn)) throw std::logic_error("Expr::apply with non-function tag");
    return Expr(
        std::make_shared<const Node>(Node{fn, GaussRat(), {}, std::make_shared<const Expr>(std::move(arg)), nullptr}));
}

bool Expr::contains_variable() const {
    if (op() == Op::Var) return true;
    if (op() == Op::Const) return false;
    if (is_binary(op())) return lhs().contains_variable() || rhs().contains_variable();
    return arg().contains_variable();
}

bool Expr::contains_trig() const {
    if (is_trig(op())) return true;
    if (op() == Op::Const || op() == Op::Var) return false;
    if (is_binary(op())) return lhs().contains_trig() || rhs().contains_trig();
    return arg().contains_trig();
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
    case Op::Const: return a.value() == b.value();
    case Op::Var: return a.name() == b.name();
    default:
        if (is_binary(a.op())) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        return a.arg() == b.arg();
    }
}

std::complex<double> evaluate(const Expr& e, std::complex<double> x, std::string_view var) {
    using C = std::complex<double>;
    switch (e.op()) {
    case Op::Const: return e.value().to_complex();
    case Op::Var:
        if (e.name() != var) throw UnsupportedError("unknown symbol '" + e.name() + "'");
        return x;
    case Op::Add: return evaluate(e.lhs(), x, var) + evaluate(e.rhs(), x, var);
    case Op::Sub: return evaluate(e.lhs(), x, var) - evaluate(e.rhs(), x, var);
    case Op::Mul: return evaluate(e.lhs(), x, var) * evaluate(e.rhs(), x, var);
    case Op::Div: return evaluate(e.lhs(), x, var) / evaluate(e.rhs(), x, var);
    case Op::Pow: {
        C base = evaluate(e.lhs(), x, var);
        if (e.rhs().is_const() && e.rhs().value().is_rational_integer() && e.rhs().value().re().fits_long()) {
            long k = e.rhs().value().re().to_long();
            C r = 1;
            C b = k < 0 ? C(1) / base : base;
            for (long n = k < 0 ? -k : k; n > 0; n >>= 1) {
                if (n & 1) r *= b;
                b *= b;
            }
            return r;
        }
        return std::pow(base, evaluate(e.rhs(), x, var));
    }
    case Op::Exp: return std::exp(evaluate(e.arg(), x, var));
    case Op::Log: return std::log(evaluate(e.arg(), x, var));
    case Op::Sin: return std::sin(evaluate(e.arg(), x, var));
    case Op::Cos: return std::cos(evaluate(e.arg(), x, var));
    case Op::Tan: return std::tan(evaluate(e.arg(), x, var));
    case Op::Cot: return C(1) / std::tan(evaluate(e.arg(), x, var));
    case Op::Arcsin: return std::asin(evaluate(e.arg(), x, var));
    case Op::Arccos: return std::acos(evaluate(e.arg(), x, var));
    case Op::Arctan: return std::atan(evaluate(e.arg(), x, var));
    case Op::Arccot: {
        C z = evaluate(e.arg(), x, var);
        return std::log((z + C(0, 1)) / (z - C(0, 1))) / C(0, 2);
    }
    }
    throw std::logic_error("unreachable");
}

GaussRat evaluate_constant(const Expr& e) {
    switch (e.op()) {
    case Op::Const: return e.value();
    case Op::Add: return evaluate_constant(e.lhs()) + evaluate_constant(e.rhs());
    case Op::Sub: return evaluate_constant(e.lhs()) - evaluate_constant(e.rhs());
    case Op::Mul: return evaluate_constant(e.lhs()) * evaluate_constant(e.rhs());
    case Op::Div: {
        GaussRat d = evaluate_constant(e.rhs());
        if (d.is_zero()) throw UnsupportedError("division by zero");
        return evaluate_constant(e.lhs()) / d;
    }
    case Op::Pow: {
        GaussRat b = evaluate_constant(e.lhs());
        GaussRat k = evaluate_constant(e.rhs());
        if (!k.is_rational_integer() || !k.re().fits_long()) throw UnsupportedError("non-integer constant power");
        if (b.is_zero() && k.re().sign() < 0) throw UnsupportedError("division by zero");
        return b.pow(k.re().to_long());
    }
    default: throw UnsupportedError("not an exact constant expression");
    }
}

}  // namespace liouville
