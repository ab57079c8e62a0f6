#include "grossone/seq_series.hpp"

#include <utility>

#include "grossone/error.hpp"

namespace grossone {

namespace {

GrossNumber Num(long v) { return from_rational(Rational(v)); }

void RequireCount(const GrossNumber& k) {
  if (!is_integer(k) || sign(k) < 0) throw Error(ErrorKind::kNotInteger, "item count must be an integer >= 0");
}

void RequireLength(const GrossNumber& l) {
  if (!validate_length(l)) throw Error(ErrorKind::kInvalidArgument, "sequence length must be an integer in [0, G]");
}

}  // namespace

SeqDescriptor SeqDescriptor::Make(GrossNumber length, std::string label) {
  RequireLength(length);
  return SeqDescriptor{std::move(length), std::move(label)};
}

bool validate_length(const GrossNumber& length) {
  return is_integer(length) && sign(length) >= 0 && cmp(length, GrossNumber::Grossone()) <= 0;
}

bool is_complete(const GrossNumber& length) { return length == GrossNumber::Grossone(); }

Concatenation concat(const GrossNumber& l1, const GrossNumber& l2) {
  RequireLength(l1);
  RequireLength(l2);
  const GrossNumber total = add(l1, l2);
  const GrossNumber g = GrossNumber::Grossone();
  const GrossNumber first = cmp(total, g) <= 0 ? total : g;
  return Concatenation{first, sub(total, first)};
}

GrossNumber sum_const(const Rational& c, const GrossNumber& k) {
  RequireCount(k);
  return scale(k, c);
}

GrossNumber sum_poly(std::span<const Rational> coefficients, const GrossNumber& k) {
  RequireCount(k);
  for (std::size_t d = 4; d < coefficients.size(); ++d) {
    if (!coefficients[d].is_zero()) {
      throw Error(ErrorKind::kDegreeTooHigh, "closed forms exist here only up to degree 3");
    }
  }
  const GrossNumber k1 = add(k, Num(1));
  const GrossNumber triangular = scale(mul(k, k1), Rational(mpz_class(1), mpz_class(2)));
  const GrossNumber power_sums[] = {
      k,
      triangular,
      scale(mul(mul(k, k1), add(scale(k, Rational(2)), Num(1))), Rational(mpz_class(1), mpz_class(6))),
      mul(triangular, triangular),
  };
  GrossNumber total;
  for (std::size_t d = 0; d < coefficients.size() && d < 4; ++d) {
    total = add(total, scale(power_sums[d], coefficients[d]));
  }
  return total;
}

ExtendedValue sum_geometric(const Rational& r, const GrossNumber& k) {
  RequireCount(k);
  if (r == Rational(1)) throw Error(ErrorKind::kRatioOne, "geometric ratio 1");
  ExtendedValue r_to_k;
  if (r.sign() < 0) {
    const Rational sign_factor = parity(k) == Parity::kEven ? Rational(1) : Rational(-1);
    r_to_k = mul(ExtendedValue(from_rational(sign_factor)), rational_power(r.abs(), k));
  } else {
    r_to_k = rational_power(r, k);
  }
  const ExtendedValue lead(from_rational(r / (Rational(1) - r)));
  return mul(lead, sub(ExtendedValue(Num(1)), r_to_k));
}

ExtendedValue e_approximant(const GrossNumber& n) {
  if (!is_integer(n) || sign(n) <= 0) throw Error(ErrorKind::kInvalidArgument, "n must be a positive integer");
  if (const auto finite = n.as_rational()) {
    const auto exponent = finite->to_int64();
    if (!exponent) throw Error(ErrorKind::kInvalidArgument, "finite n too large to expand");
    return ExtendedValue(from_rational((Rational(1) + finite->reciprocal()).pow(*exponent)));
  }
  const DivisionResult inverse = div(Num(1), n, 64);
  if (!inverse.exact) throw Error(ErrorKind::kUnsupportedShape, "1/n has no finite positional record");
  return ExtendedValue::Symbolic(SymbolicPower{add(Num(1), inverse.quotient), n});
}

}  // namespace grossone
