#ifndef GROSSONE_EXTENDED_VALUE_HPP
#define GROSSONE_EXTENDED_VALUE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "grossone/gross_number.hpp"
#include "grossone/rational.hpp"

namespace grossone {

// base^exponent with a rational base > 1, kept symbolic because values such
// as 2^G or 10^(-G) have no positional record.
struct PowAtom {
  Rational base;
  GrossNumber exponent;

  friend bool operator==(const PowAtom&, const PowAtom&) = default;
};

// coefficient * product of atoms; atoms sorted by base, bases distinct.
struct ProductTerm {
  GrossNumber coefficient;
  std::vector<PowAtom> atoms;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

// Unevaluated base^exponent with a grossnumber base, e.g. (1 + G^-1)^G. Only
// printed; arithmetic on it throws Unsupported.
struct SymbolicPower {
  GrossNumber base;
  GrossNumber exponent;

  friend bool operator==(const SymbolicPower&, const SymbolicPower&) = default;
};

// Sum of product terms over GrossNumbers and PowAtoms. A value without atoms
// is exactly a GrossNumber. Canonical: no zero coefficients, terms ordered by
// their atom lists (the atom-free part first), equal atom lists merged.
class ExtendedValue {
 public:
  ExtendedValue() = default;
  ExtendedValue(const GrossNumber& value);  // NOLINT(google-explicit-constructor)

  static ExtendedValue Canonicalize(std::vector<ProductTerm> raw);
  static ExtendedValue Atom(const PowAtom& atom);
  static ExtendedValue Symbolic(const SymbolicPower& record);

  const std::vector<ProductTerm>& terms() const { return terms_; }
  const std::optional<SymbolicPower>& symbolic() const { return symbolic_; }

  bool is_zero() const { return terms_.empty() && !symbolic_; }
  bool is_gross() const;
  std::optional<GrossNumber> as_gross() const;
  // Coefficient of the atom-free term (zero when absent).
  GrossNumber pure_part() const;

  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

 private:
  std::vector<ProductTerm> terms_;
  std::optional<SymbolicPower> symbolic_;
};

struct DivisionOptions {
  std::size_t max_terms = 20;
  // Inexact quotients throw InexactDivision instead of being truncated.
  bool strict = true;
};

ExtendedValue add(const ExtendedValue& a, const ExtendedValue& b);
ExtendedValue neg(const ExtendedValue& a);
ExtendedValue sub(const ExtendedValue& a, const ExtendedValue& b);
ExtendedValue mul(const ExtendedValue& a, const ExtendedValue& b);
// The divisor must be a single product term (any GrossNumber, or one term
// carrying atoms).
ExtendedValue divide(const ExtendedValue& a, const ExtendedValue& b, const DivisionOptions& options = {});

// base^exponent under the calculator's power rules: finite integer exponents
// multiply out, G^0 = 1, 1^E = 1, 0^E = 0 for E > 0, (-1)^n by parity,
// positive rational bases with other exponents become atoms, and a positive
// multi-term base with a positive infinite exponent becomes a SymbolicPower.
// Throws UnsupportedPow for everything else.
ExtendedValue power(const ExtendedValue& base, const ExtendedValue& exponent, const DivisionOptions& options = {});
ExtendedValue rational_power(const Rational& base, const GrossNumber& exponent);

enum class ExtendedOrdering { kLess, kEqual, kGreater, kIncomparable };

std::string_view ExtendedOrderingName(ExtendedOrdering ordering);

// Delegates to cmp for plain GrossNumbers. Otherwise the difference is
// decided only when it is a single atom term, or when every atom term either
// has all exponents positive infinite (dominates any GrossNumber with finite
// grosspowers) or all negative infinite (is dominated by it). Anything else
// is Incomparable.
ExtendedOrdering cmp_extended(const ExtendedValue& a, const ExtendedValue& b);

// classify() extended to atom terms by the same dominance rules; nullopt
// when the value cannot be classified.
std::optional<NumberClass> classify_extended(const ExtendedValue& value);

inline ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) { return add(a, b); }
inline ExtendedValue operator-(const ExtendedValue& a, const ExtendedValue& b) { return sub(a, b); }
inline ExtendedValue operator-(const ExtendedValue& a) { return neg(a); }
inline ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b) { return mul(a, b); }

}  // namespace grossone

#endif  // GROSSONE_EXTENDED_VALUE_HPP
