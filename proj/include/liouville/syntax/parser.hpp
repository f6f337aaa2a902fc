#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "liouville/syntax/expr.hpp"

namespace liouville {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t column)
        : std::runtime_error("column " + std::to_string(column) + ": " + message),
          message_(std::move(message)),
          column_(column) {}

    /// 1-based column of the offending character; one past the end for
    /// premature end of input.
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t column_;
};

/// Recursive-descent parser.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
///
/// `i` is the imaginary unit and `ln` is an alias of `log`. A binary
/// operation whose operands are both constants is folded into one Const
/// (integer powers only), so "1/2" and "3*i" denote single constants.
/// Unary minus yields Mul(Const(-1), e) for non-constant e.
Expr parse(std::string_view text);

}  // namespace liouville
