#ifndef KHOLO_EXPR_HPP
#define KHOLO_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kholo/poly.hpp"

namespace kholo {

/// Expression tree produced by the parser.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := rational | 'i' | ident | '(' expr ')' | '-' factor
///   rational := int ['/' nat]
///
/// Implicit multiplication is not accepted.
struct Expr {
  enum class Op { Constant, Variable, Neg, Add, Sub, Mul, Pow };

  Op op = Op::Constant;
  GaussianRational constant;
  std::string name;
  std::uint64_t exponent = 0;
  std::vector<Expr> args;
  // 1-based source position of the node's first token
  std::size_t line = 1;
  std::size_t column = 1;
};

Expr parse_expr(std::string_view text);

/// Lowers an expression into `space`. Unindexed names x, y, z, w resolve to
/// x1, y1, z1, w1 when the space has exactly one variable of that kind.
SparsePoly lower(const Expr& expr, const VarSpace& space);

/// parse_expr followed by lower. Throws SyntaxError (with line/column),
/// UnknownVariable or NegativeExponent.
SparsePoly parse_poly(std::string_view text, const VarSpace& space);

/// Parses a constant such as "3/2", "i", "1-2*i".
GaussianRational parse_gaussian(std::string_view text);

/// Canonical text: terms in descending grlex order, coefficients written as
/// "a", "a/b", "(b*i)" or "(a+b*i)", the zero polynomial as "0".
std::string print_poly(const SparsePoly& p);

}  // namespace kholo

#endif  // KHOLO_EXPR_HPP
