#include "liouville/syntax/parser.hpp"

#include <cctype>
#include <optional>

namespace liouville {

namespace {

constexpr long kMaxFoldedExponent = 4096;

std::optional<Op> function_tag(std::string_view name) {
    if (name == "exp") return Op::Exp;
    if (name == "log" || name == "ln") return Op::Log;
    if (name == "sin") return Op::Sin;
    if (name == "cos") return Op::Cos;
    if (name == "tan") return Op::Tan;
    if (name == "cot") return Op::Cot;
    if (name == "arcsin") return Op::Arcsin;
    if (name == "arccos") return Op::Arccos;
    if (name == "arctan") return Op::Arctan;
    if (name == "arccot") return Op::Arccot;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (accept('+'))
                e = combine(Op::Add, std::move(e), term());
            else if (accept('-'))
                e = combine(Op::Sub, std::move(e), term());
            else
                return e;
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) {
                e = combine(Op::Mul, std::move(e), unary());
            } else if (accept('/')) {
                std::size_t at = pos_;
                Expr d = unary();
                if (d.is_const() && d.value().is_zero()) throw ParseError("division by zero", at + 1);
                e = combine(Op::Div, std::move(e), std::move(d));
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept('-')) {
            Expr e = unary();
            if (e.is_const()) return Expr::constant(-e.value());
            return Expr::constant(GaussRat(-1)) * std::move(e);
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return combine(Op::Pow, std::move(base), unary());
        return base;
    }

    Expr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            Expr e = expr();
            expect(')');
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr number() {
        std::size_t start = pos_;
        bool dot = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '.' && !dot) {
                dot = true;
                ++pos_;
            } else {
                break;
            }
        }
        std::string_view lit = text_.substr(start, pos_ - start);
        if (lit == ".") throw ParseError("malformed number", start + 1);
        return Expr::constant(GaussRat(Rat::parse(lit)));
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (auto fn = function_tag(name)) {
            if (!accept('(')) fail("expected '(' after function name '" + name + "'");
            Expr arg = expr();
            expect(')');
            return Expr::apply(*fn, std::move(arg));
        }
        if (name == "i") return Expr::constant(GaussRat::imaginary_unit());
        return Expr::variable(std::move(name));
    }

    static Expr combine(Op op, Expr a, Expr b) {
        if (a.is_const() && b.is_const()) {
            const GaussRat& x = a.value();
            const GaussRat& y = b.value();
            switch (op) {
            case Op::Add: return Expr::constant(x + y);
            case Op::Sub: return Expr::constant(x - y);
            case Op::Mul: return Expr::constant(x * y);
            case Op::Div: return Expr::constant(x / y);
            case Op::Pow:
                if (y.is_rational_integer() && y.re().fits_long()) {
                    long k = y.re().to_long();
                    if ((k >= 0 || !x.is_zero()) && k <= kMaxFoldedExponent && k >= -kMaxFoldedExponent)
                        return Expr::constant(x.pow(k));
                }
                break;
            default: break;
            }
        }
        return Expr::binary(op, std::move(a), std::move(b));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace liouville
