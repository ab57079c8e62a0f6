#ifndef GROSSONE_EXPR_HPP
#define GROSSONE_EXPR_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grossone/extended_value.hpp"
#include "grossone/rational.hpp"

namespace grossone {

// Calculator syntax tree.
struct Expr {
  enum class Kind { kLiteral, kGrossone, kVariable, kNeg, kAdd, kSub, kMul, kDiv, kPow };

  Kind kind = Kind::kLiteral;
  Rational value;             // kLiteral
  std::string name;           // kVariable
  std::vector<Expr> operands;  // one for kNeg, two for binary nodes

  static Expr Literal(const Rational& value);
  static Expr Grossone();
  static Expr Variable(std::string name);
  static Expr Neg(Expr operand);
  static Expr Binary(Kind kind, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Debug rendering, fully parenthesised: "Add(Mul(16.5, Pow(G, 44.2)), 17)".
std::string to_string(const Expr& expr);

// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor | factor-starting-with-G)*
//   factor := "-" factor | atom ("^" factor)?
//   atom   := number | "G" | ident | "(" expr ")"
// Numbers are decimal literals read exactly; "p/q" is ordinary division.
// "G" and U+2460 both denote grossone. Throws SyntaxError.
Expr parse(std::string_view text);

using Environment = std::map<std::string, ExtendedValue, std::less<>>;

// Folds the tree with exact arithmetic. Throws UnboundVariable,
// DivisionByZero, InexactDivision (strict mode) and UnsupportedPow.
ExtendedValue eval(const Expr& expr, const Environment& env = {}, const DivisionOptions& options = {});

// format(eval(parse(text))) in exact mode.
std::string parse_roundtrip(std::string_view text);

}  // namespace grossone

#endif  // GROSSONE_EXPR_HPP
