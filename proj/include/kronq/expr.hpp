#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "kronq/torus.hpp"

namespace kronq {

struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

/// Abstract syntax tree over the calculator grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := 'X[' int ']' | 'z[' nat ']' | 's[' nat ']' | 'Z'
///           | 'q^{' int '/2}' | nat | '(' expr ')'
/// Multiplication is noncommutative and left-associative.
struct Expr {
    enum class Op { Add, Sub, Mul, Pow, XVar, ChebFirst, ChebSecond, Delta, QPow, Int };

    Op op = Op::Int;
    long arg = 0;  // index for XVar/Cheb*, v-exponent for QPow, value for Int/Pow
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses the full input; throws SyntaxError with the byte offset of the
/// first offending character.
ExprPtr parse_expr(std::string_view src);

/// Exact evaluation in the torus, product order preserved.
TorusElem eval_expr(const Expr& e);

/// Renders the tree back into the grammar; parse_expr(pretty_expr(t))
/// reproduces t.
std::string pretty_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

}  // namespace kronq
