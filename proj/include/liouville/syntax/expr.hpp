#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liouville/algebra/rational.hpp"

namespace liouville {

enum class Op {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Exp,
    Log,
    Sin,
    Cos,
    Tan,
    Cot,
    Arcsin,
    Arccos,
    Arctan,
    Arccot,
};

bool is_binary(Op op);
bool is_function(Op op);
bool is_trig(Op op);
/// Surface name of a function tag ("exp", "arctan", ...).
std::string_view function_name(Op op);

/// Immutable expression tree shared by value.
class Expr {
public:
    Expr();  // the constant 0

    static Expr constant(GaussRat value);
    static Expr variable(std::string name);
    static Expr binary(Op op, Expr lhs, Expr rhs);
    static Expr apply(Op fn, Expr arg);

    Op op() const { return node_->op; }
    const GaussRat& value() const { return node_->value; }
    const std::string& name() const { return node_->name; }
    const Expr& lhs() const { return *node_->lhs; }
    const Expr& rhs() const { return *node_->rhs; }
    /// Argument of a unary function node.
    const Expr& arg() const { return *node_->lhs; }

    bool is_const() const { return op() == Op::Const; }
    bool contains_variable() const;
    bool contains_trig() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node {
        Op op;
        GaussRat value;
        std::string name;
        std::shared_ptr<const Expr> lhs;
        std::shared_ptr<const Expr> rhs;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline Expr operator+(Expr a, Expr b) { return Expr::binary(Op::Add, std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return Expr::binary(Op::Sub, std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::binary(Op::Mul, std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return Expr::binary(Op::Div, std::move(a), std::move(b)); }

/// Input the pipeline cannot handle: fractional powers, unknown symbols,
/// transcendental constants and similar.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric value with principal branches. arccot(z) is
/// log((z + i)/(z - i))/(2i), which is arctan(1/z) for real z != 0.
std::complex<double> evaluate(const Expr& e, std::complex<double> x, std::string_view var = "x");

/// Exact value of a variable-free expression built from + - * / and integer
/// powers; throws UnsupportedError when the expression is not of that form.
GaussRat evaluate_constant(const Expr& e);

}  // namespace liouville
