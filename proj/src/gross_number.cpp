#include "grossone/gross_number.hpp"

#include <algorithm>
#include <utility>

#include "grossone/error.hpp"

namespace grossone {

namespace {

std::strong_ordering FromSign(int s) {
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool IsPositiveInteger(const GrossNumber& a) { return sign(a) > 0 && is_integer(a); }

}  // namespace

std::string_view NumberClassName(NumberClass number_class) {
  switch (number_class) {
    case NumberClass::kZero: return "Zero";
    case NumberClass::kFinitePure: return "FinitePure";
    case NumberClass::kInfinitesimal: return "Infinitesimal";
    case NumberClass::kInfinite: return "Infinite";
    case NumberClass::kFiniteMixed: return "FiniteMixed";
  }
  return "Unknown";
}

GrossNumber GrossNumber::Canonicalize(std::vector<Term> raw) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Term& x, const Term& y) { return cmp(x.power, y.power) > 0; });
  std::vector<Term> merged;
  merged.reserve(raw.size());
  for (auto& term : raw) {
    if (!merged.empty() && merged.back().power == term.power) {
      merged.back().digit += term.digit;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.digit.is_zero(); });
  return GrossNumber(std::move(merged));
}

GrossNumber GrossNumber::FromRational(const Rational& value) {
  if (value.is_zero()) return {};
  return GrossNumber({Term{GrossNumber(), value}});
}

GrossNumber GrossNumber::Monomial(const Rational& digit, const GrossNumber& power) {
  if (digit.is_zero()) return {};
  return GrossNumber({Term{power, digit}});
}

GrossNumber GrossNumber::Grossone() { return Monomial(Rational(1), FromRational(Rational(1))); }

bool GrossNumber::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].power.is_zero()); }

std::optional<Rational> GrossNumber::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].power.is_zero()) return terms_[0].digit;
  return std::nullopt;
}

bool GrossNumber::has_finite_powers() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.power.is_rational(); });
}

const Term& GrossNumber::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::kInvalidArgument, "zero has no leading term");
  return terms_.front();
}

bool operator==(const GrossNumber& a, const GrossNumber& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) { return cmp(a, b); }

GrossNumber from_rational(const Rational& value) { return GrossNumber::FromRational(value); }

GrossNumber add(const GrossNumber& a, const GrossNumber& b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    const auto order = cmp(i->power, j->power);
    if (order > 0) {
      out.push_back(*i++);
    } else if (order < 0) {
      out.push_back(*j++);
    } else {
      out.push_back(Term{i->power, i->digit + j->digit});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms().end());
  out.insert(out.end(), j, b.terms().end());
  // Already sorted; Canonicalize only has zero digits left to drop.
  return GrossNumber::Canonicalize(std::move(out));
}

GrossNumber neg(const GrossNumber& a) { return scale(a, Rational(-1)); }

GrossNumber sub(const GrossNumber& a, const GrossNumber& b) { return add(a, neg(b)); }

GrossNumber scale(const GrossNumber& a, const Rational& factor) {
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back(Term{t.power, t.digit * factor});
  return GrossNumber::Canonicalize(std::move(out));
}

GrossNumber mul(const GrossNumber& a, const GrossNumber& b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& tb : b.terms()) {
    for (const auto& ta : a.terms()) out.push_back(Term{add(ta.power, tb.power), ta.digit * tb.digit});
  }
  return GrossNumber::Canonicalize(std::move(out));
}

DivisionResult div(const GrossNumber& dividend, const GrossNumber& divisor, std::size_t max_terms) {
  if (divisor.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  if (max_terms == 0) throw Error(ErrorKind::kInvalidArgument, "max_terms must be at least 1");
  const Term& lead = divisor.leading();
  DivisionResult result;
  GrossNumber remainder = dividend;
  std::vector<Term> quotient;
  for (std::size_t step = 0; step < max_terms && !remainder.is_zero(); ++step) {
    const Term& top = remainder.leading();
    const GrossNumber step_term = GrossNumber::Monomial(top.digit / lead.digit, sub(top.power, lead.power));
    quotient.push_back(step_term.leading());
    remainder = sub(remainder, mul(step_term, divisor));
    result.partial_remainders.push_back(remainder);
  }
  result.quotient = GrossNumber::Canonicalize(std::move(quotient));
  result.exact = remainder.is_zero();
  result.remainder = std::move(remainder);
  return result;
}

std::strong_ordering cmp(const GrossNumber& a, const GrossNumber& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (i == x.size()) return FromSign(-y[j].digit.sign());
    if (j == y.size()) return FromSign(x[i].digit.sign());
    const auto order = cmp(x[i].power, y[j].power);
    if (order > 0) return FromSign(x[i].digit.sign());
    if (order < 0) return FromSign(-y[j].digit.sign());
    if (x[i].digit != y[j].digit) return x[i].digit <=> y[j].digit;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

int sign(const GrossNumber& a) { return a.is_zero() ? 0 : a.leading().digit.sign(); }

NumberClass classify(const GrossNumber& a) {
  if (a.is_zero()) return NumberClass::kZero;
  const int top = sign(a.leading().power);
  if (top > 0) return NumberClass::kInfinite;
  if (top < 0) return NumberClass::kInfinitesimal;
  return a.terms().size() == 1 ? NumberClass::kFinitePure : NumberClass::kFiniteMixed;
}

GrossNumber pow_nat(const GrossNumber& base, unsigned long exponent) {
  GrossNumber result = from_rational(Rational(1));
  GrossNumber square = base;
  while (exponent != 0) {
    if ((exponent & 1UL) != 0) result = mul(result, square);
    exponent >>= 1;
    if (exponent != 0) square = mul(square, square);
  }
  return result;
}

GrossNumber nth_root(const GrossNumber& a, unsigned long j) {
  if (j == 0) throw Error(ErrorKind::kInvalidArgument, "zeroth root");
  if (a.is_zero()) return {};
  if (!a.is_monomial()) throw Error(ErrorKind::kUnsupportedShape, "root of a number with several terms");
  const Term& t = a.leading();
  if (t.digit.sign() < 0) throw Error(ErrorKind::kUnsupportedShape, "root of a negative number");
  const auto digit_root = t.digit.root(j);
  if (!digit_root) {
    throw Error(ErrorKind::kInexactRoot, "digit " + t.digit.to_string() + " has no rational root of order " +
                                             std::to_string(j));
  }
  return GrossNumber::Monomial(*digit_root, scale(t.power, Rational(1) / Rational(static_cast<long>(j))));
}

bool is_integer(const GrossNumber& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const Term& t) {
    const int s = sign(t.power);
    if (s == 0) return t.digit.is_integer();
    return s > 0 && IsPositiveInteger(t.power);
  });
}

Parity parity(const GrossNumber& a) {
  if (!is_integer(a)) throw Error(ErrorKind::kNotInteger, "parity of a non-integer");
  if (a.is_zero() || !a.terms().back().power.is_zero()) return Parity::kEven;
  return a.terms().back().digit.is_even_integer() ? Parity::kEven : Parity::kOdd;
}

GrossNumber floor(const GrossNumber& a) {
  std::vector<Term> whole;
  Rational finite;
  GrossNumber tail;
  std::vector<Term> small;
  for (const auto& t : a.terms()) {
    const int s = sign(t.power);
    if (s > 0) {
      if (!IsPositiveInteger(t.power)) {
        throw Error(ErrorKind::kUnsupportedForm, "integer part of a term with a non-integer grosspower");
      }
      whole.push_back(t);
    } else if (s == 0) {
      finite = t.digit;
    } else {
      small.push_back(t);
    }
  }
  tail = GrossNumber::Canonicalize(std::move(small));
  Rational integer_part = finite.floor();
  if (finite.is_integer() && sign(tail) < 0) integer_part -= Rational(1);
  whole.push_back(Term{GrossNumber(), integer_part});
  return GrossNumber::Canonicalize(std::move(whole));
}

}  // namespace grossone
