#ifndef GROSSONE_GROSS_NUMBER_HPP
#define GROSSONE_GROSS_NUMBER_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "grossone/rational.hpp"

namespace grossone {

struct Term;

// A number in the positional system with radix grossone: a finite sum of
// digit * G^power with rational digits and grosspowers that are themselves
// GrossNumbers. Always canonical: powers strictly decreasing, no zero
// digits, zero is the empty sum. Immutable once built.
class GrossNumber {
 public:
  GrossNumber() = default;

  // Merges equal powers, drops zero digits, sorts by decreasing power.
  static GrossNumber Canonicalize(std::vector<Term> raw);
  static GrossNumber FromRational(const Rational& value);
  static GrossNumber Monomial(const Rational& digit, const GrossNumber& power);
  // G itself.
  static GrossNumber Grossone();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Zero or a single term at power zero.
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Every grosspower, recursively, is a finite rational.
  bool has_finite_powers() const;
  // Leading (highest-power) term; requires !is_zero().
  const Term& leading() const;

  friend bool operator==(const GrossNumber& a, const GrossNumber& b);
  friend std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b);

 private:
  explicit GrossNumber(std::vector<Term> canonical_terms) : terms_(std::move(canonical_terms)) {}

  std::vector<Term> terms_;
};

struct Term {
  GrossNumber power;
  Rational digit;

  friend bool operator==(const Term& a, const Term& b) = default;
};

enum class NumberClass { kZero, kFinitePure, kInfinitesimal, kInfinite, kFiniteMixed };

std::string_view NumberClassName(NumberClass number_class);

GrossNumber from_rational(const Rational& value);

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber neg(const GrossNumber& a);
GrossNumber sub(const GrossNumber& a, const GrossNumber& b);
GrossNumber mul(const GrossNumber& a, const GrossNumber& b);
GrossNumber scale(const GrossNumber& a, const Rational& factor);

struct DivisionResult {
  GrossNumber quotient;
  GrossNumber remainder;
  // A partial remainder reached zero within the step budget.
  bool exact = false;
  // R_1, R_2, ... in order; the last one equals `remainder`.
  std::vector<GrossNumber> partial_remainders;
};

// Long division by leading terms. Each step divides the leading digit of the
// running remainder by the leading digit of `divisor`, subtracts that
// monomial times `divisor`, and stops on a zero remainder or after
// `max_terms` quotient terms. dividend == quotient * divisor + remainder
// holds exactly in every case. Throws DivisionByZero.
DivisionResult div(const GrossNumber& dividend, const GrossNumber& divisor, std::size_t max_terms);

// Total order: sign of the leading digit of (a - b).
std::strong_ordering cmp(const GrossNumber& a, const GrossNumber& b);
int sign(const GrossNumber& a);
NumberClass classify(const GrossNumber& a);

GrossNumber pow_nat(const GrossNumber& base, unsigned long exponent);

// Exact j-th root of a positive single-term number. Throws InexactRoot when
// the digit has no rational root and UnsupportedShape for anything that is
// not a positive monomial.
GrossNumber nth_root(const GrossNumber& a, unsigned long j);

// Integer in the sense of the divisibility axiom: G/q is an integer for any
// finite q, so c*G^p is an integer whenever p is a positive integer.
bool is_integer(const GrossNumber& a);

enum class Parity { kEven, kOdd };

// Parity of the power-zero digit; every c*G^p with p >= 1 is even.
// Throws NotInteger.
Parity parity(const GrossNumber& a);

// Greatest integer not above `a`. Requires that every positive-power term
// already be an integer term (throws UnsupportedForm otherwise).
GrossNumber floor(const GrossNumber& a);

inline GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) { return add(a, b); }
inline GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return sub(a, b); }
inline GrossNumber operator-(const GrossNumber& a) { return neg(a); }
inline GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) { return mul(a, b); }

}  // namespace grossone

#endif  // GROSSONE_GROSS_NUMBER_HPP
