#include "grossone/format.hpp"

#include <utility>
#include <vector>

namespace grossone {

namespace {

struct Piece {
  bool negative = false;
  std::string body;
};

bool Decimal(const FormatOptions& options) { return options.mode == FormatOptions::Mode::kDecimal; }

std::string PowerText(const GrossNumber& power, const FormatOptions& options) {
  if (const auto r = power.as_rational(); r && (Decimal(options) || r->is_terminating_decimal())) {
    return format(*r, options);
  }
  return "(" + format(power, options) + ")";
}

// |digit| * G^power without sign.
std::string MonomialText(const Rational& magnitude, const GrossNumber& power, const FormatOptions& options) {
  const bool plain = Decimal(options) || magnitude.is_terminating_decimal();
  if (power.is_zero()) return plain ? format(magnitude, options) : magnitude.to_string();
  const bool unit_power = power == from_rational(Rational(1));
  const std::string g = unit_power ? "G" : "G^" + PowerText(power, options);
  if (magnitude == Rational(1)) return g;
  if (plain) return format(magnitude, options) + g;
  const std::string num = magnitude.numerator().get_str();
  return (num == "1" ? "" : num) + g + "/" + magnitude.denominator().get_str();
}

void AppendGross(const GrossNumber& value, const FormatOptions& options, std::vector<Piece>& out) {
  for (const auto& t : value.terms()) {
    out.push_back(Piece{t.digit.sign() < 0, MonomialText(t.digit.abs(), t.power, options)});
  }
}

std::string AtomText(const PowAtom& atom, const FormatOptions& options) {
  std::string base = atom.base.is_terminating_decimal() ? atom.base.to_decimal_string()
                                                        : "(" + atom.base.to_string() + ")";
  return base + "^(" + format(atom.exponent, options) + ")";
}

Piece ProductPiece(const ProductTerm& term, const FormatOptions& options) {
  std::string atoms;
  for (const auto& atom : term.atoms) {
    if (!atoms.empty()) atoms += "*";
    atoms += AtomText(atom, options);
  }
  const GrossNumber& c = term.coefficient;
  const bool negative = sign(c) < 0;
  if (c.is_monomial()) {
    const Term& t = c.leading();
    if (t.power.is_zero() && t.digit.abs() == Rational(1)) return {negative, atoms};
    return {negative, MonomialText(t.digit.abs(), t.power, options) + "*" + atoms};
  }
  return {negative, "(" + format(negative ? neg(c) : c, options) + ")*" + atoms};
}

std::string Join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += "-";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

}  // namespace

std::string format(const Rational& value, const FormatOptions& options) {
  if (Decimal(options)) return value.to_significant_string(options.digits);
  return value.is_terminating_decimal() ? value.to_decimal_string() : value.to_string();
}

std::string format(const GrossNumber& value, const FormatOptions& options) {
  std::vector<Piece> pieces;
  AppendGross(value, options, pieces);
  return Join(pieces);
}

std::string format(const ExtendedValue& value, const FormatOptions& options) {
  if (const auto& record = value.symbolic()) {
    return "(" + format(record->base, options) + ")^(" + format(record->exponent, options) + ")";
  }
  std::vector<Piece> pieces;
  for (const auto& term : value.terms()) {
    if (term.atoms.empty()) {
      AppendGross(term.coefficient, options, pieces);
    } else {
      pieces.push_back(ProductPiece(term, options));
    }
  }
  return Join(pieces);
}

}  // namespace grossone
