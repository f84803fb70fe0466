#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtsym/linop.hpp"

namespace qtsym {

/// Syntax error with the 0-based column where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string input, std::size_t pos, const std::string& message);

    std::size_t position() const { return pos_; }
    const std::string& message() const { return message_; }
    /// Three lines: the message, the input, and a caret under the column.
    std::string diagnostic() const;

private:
    std::string input_;
    std::size_t pos_;
    std::string message_;
};

/// Operator expression:
///   expr    := ['-'] product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | atom
///   atom    := number ['/' number] | ('q' | 't') ['^' ['-'] number]
///            | name '(' args ')' | '(' expr ')'
/// with the calls S(m) St(m) jing(m[,q|t]) Dt(m) Dts(m) hlcol(m) maccol(m)
/// homcol(m) homcol0(m) flip(E) qtwist(E) ttwist(E) ftconj(E).
/// Sums and products made only of scalars fold into one scalar.
struct OpExpr {
    enum class Kind { scalar, call, compose, sum };

    Kind kind = Kind::scalar;
    QTPoly value;               // scalar value; for jing, the parameter
    std::string name;           // call name
    std::vector<int> ints;      // integer call arguments
    std::vector<OpExpr> args;   // operator call arguments, factors or summands
    std::vector<int> signs;     // per summand, +1 or -1

    friend bool operator==(const OpExpr&, const OpExpr&) = default;
};

OpExpr parse_op(const std::string& text);
std::string print_op(const OpExpr& e);
LinOp build_op(const OpExpr& e);

/// Symmetric function literal such as "s[2,1]", "(1+q) h[2] - t*e[1,1] + 1".
/// Factors may be juxtaposed; the result is in the Schur basis.
SymF parse_symf(const std::string& text);
/// Polynomial literal such as "1-q^2*t+1/2*t^-1".
QTPoly parse_qtpoly(const std::string& text);

}  // namespace qtsym
