#include "grossone/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "grossone/error.hpp"
#include "grossone/format.hpp"

namespace grossone {

namespace {

constexpr std::string_view kCircledOne = "\xE2\x91\xA0";

enum class TokenKind { kNumber, kGrossone, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::size_t position;
  std::string text;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text.substr(i, kCircledOne.size()) == kCircledOne) {
      tokens.push_back({TokenKind::kGrossone, start, "G"});
      i += kCircledOne.size();
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
      bool dot = false;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) != 0 || (text[i] == '.' && !dot))) {
        dot = dot || text[i] == '.';
        ++i;
      }
      const std::string literal(text.substr(start, i - start));
      if (literal == ".") throw SyntaxError(start, "stray '.'");
      tokens.push_back({TokenKind::kNumber, start, literal});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) != 0 || text[i] == '_')) ++i;
      std::string word(text.substr(start, i - start));
      tokens.push_back({word == "G" ? TokenKind::kGrossone : TokenKind::kIdent, start, std::move(word)});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::kPlus; break;
      case '-': kind = TokenKind::kMinus; break;
      case '*': kind = TokenKind::kStar; break;
      case '/': kind = TokenKind::kSlash; break;
      case '^': kind = TokenKind::kCaret; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      default: throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  tokens.push_back({TokenKind::kEnd, text.size(), ""});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Tokenize(text)) {}

  Expr ParseAll() {
    Expr e = ParseExpr();
    if (Peek().kind != TokenKind::kEnd) throw SyntaxError(Peek().position, "unexpected '" + Peek().text + "'");
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  Expr ParseExpr() {
    Expr lhs = ParseTerm();
    while (Peek().kind == TokenKind::kPlus || Peek().kind == TokenKind::kMinus) {
      const auto kind = Next().kind == TokenKind::kPlus ? Expr::Kind::kAdd : Expr::Kind::kSub;
      lhs = Expr::Binary(kind, std::move(lhs), ParseTerm());
    }
    return lhs;
  }

  Expr ParseTerm() {
    Expr lhs = ParseFactor();
    for (;;) {
      const TokenKind k = Peek().kind;
      if (k == TokenKind::kStar || k == TokenKind::kSlash) {
        Next();
        lhs = Expr::Binary(k == TokenKind::kStar ? Expr::Kind::kMul : Expr::Kind::kDiv, std::move(lhs), ParseFactor());
      } else if (k == TokenKind::kGrossone || k == TokenKind::kIdent) {
        lhs = Expr::Binary(Expr::Kind::kMul, std::move(lhs), ParseFactor());
      } else {
        return lhs;
      }
    }
  }

  Expr ParseFactor() {
    if (Peek().kind == TokenKind::kMinus) {
      Next();
      return Expr::Neg(ParseFactor());
    }
    Expr base = ParseAtom();
    if (Peek().kind == TokenKind::kCaret) {
      Next();
      return Expr::Binary(Expr::Kind::kPow, std::move(base), ParseFactor());
    }
    return base;
  }

  Expr ParseAtom() {
    const Token& t = Next();
    switch (t.kind) {
      case TokenKind::kNumber: return Expr::Literal(Rational::Parse(t.text));
      case TokenKind::kGrossone: return Expr::Grossone();
      case TokenKind::kIdent: return Expr::Variable(t.text);
      case TokenKind::kLParen: {
        Expr inner = ParseExpr();
        if (Peek().kind != TokenKind::kRParen) throw SyntaxError(Peek().position, "expected ')'");
        Next();
        return inner;
      }
      case TokenKind::kEnd: throw SyntaxError(t.position, "unexpected end of input");
      default: throw SyntaxError(t.position, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view KindName(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::kNeg: return "Neg";
    case Expr::Kind::kAdd: return "Add";
    case Expr::Kind::kSub: return "Sub";
    case Expr::Kind::kMul: return "Mul";
    case Expr::Kind::kDiv: return "Div";
    case Expr::Kind::kPow: return "Pow";
    default: return "";
  }
}

}  // namespace

Expr Expr::Literal(const Rational& value) {
  Expr e;
  e.kind = Kind::kLiteral;
  e.value = value;
  return e;
}

Expr Expr::Grossone() {
  Expr e;
  e.kind = Kind::kGrossone;
  return e;
}

Expr Expr::Variable(std::string name) {
  Expr e;
  e.kind = Kind::kVariable;
  e.name = std::move(name);
  return e;
}

Expr Expr::Neg(Expr operand) {
  Expr e;
  e.kind = Kind::kNeg;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

std::string to_string(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::kLiteral: return format(expr.value);
    case Expr::Kind::kGrossone: return "G";
    case Expr::Kind::kVariable: return expr.name;
    default: break;
  }
  std::string out(KindName(expr.kind));
  out += "(";
  for (std::size_t i = 0; i < expr.operands.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(expr.operands[i]);
  }
  return out + ")";
}

Expr parse(std::string_view text) { return Parser(text).ParseAll(); }

ExtendedValue eval(const Expr& expr, const Environment& env, const DivisionOptions& options) {
  switch (expr.kind) {
    case Expr::Kind::kLiteral: return ExtendedValue(from_rational(expr.value));
    case Expr::Kind::kGrossone: return ExtendedValue(GrossNumber::Grossone());
    case Expr::Kind::kVariable: {
      const auto it = env.find(expr.name);
      if (it == env.end()) throw Error(ErrorKind::kUnboundVariable, "'" + expr.name + "' is not bound");
      return it->second;
    }
    case Expr::Kind::kNeg: return neg(eval(expr.operands[0], env, options));
    default: break;
  }
  const ExtendedValue lhs = eval(expr.operands[0], env, options);
  const ExtendedValue rhs = eval(expr.operands[1], env, options);
  switch (expr.kind) {
    case Expr::Kind::kAdd: return add(lhs, rhs);
    case Expr::Kind::kSub: return sub(lhs, rhs);
    case Expr::Kind::kMul: return mul(lhs, rhs);
    case Expr::Kind::kDiv: return divide(lhs, rhs, options);
    case Expr::Kind::kPow: return power(lhs, rhs, options);
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument, "malformed expression tree");
}

std::string parse_roundtrip(std::string_view text) { return format(eval(parse(text))); }

}  // namespace grossone
