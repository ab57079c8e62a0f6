#ifndef GROSSONE_SEQ_SERIES_HPP
#define GROSSONE_SEQ_SERIES_HPP

#include <span>
#include <string>

#include "grossone/extended_value.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/rational.hpp"

namespace grossone {

// A sequence is described by how many members it has; the label is only
// shown to the user.
struct SeqDescriptor {
  GrossNumber length;
  std::string label;

  // Throws InvalidArgument unless validate_length(length).
  static SeqDescriptor Make(GrossNumber length, std::string label = {});
};

// An integer with 0 <= length <= G: no sequence of naturals has more than G
// members.
bool validate_length(const GrossNumber& length);
// Exactly G members.
bool is_complete(const GrossNumber& length);

struct Concatenation {
  GrossNumber first;     // min(l1 + l2, G)
  GrossNumber leftover;  // what does not fit into the first sequence
};

// Throws InvalidArgument on an invalid length.
Concatenation concat(const GrossNumber& l1, const GrossNumber& l2);

// Closed forms over an explicit item count k (an integer >= 0, possibly
// infinite). Throw NotInteger for any other k.
GrossNumber sum_const(const Rational& c, const GrossNumber& k);
// sum_{i=1..k} (c0 + c1 i + c2 i^2 + c3 i^3). Throws DegreeTooHigh when a
// coefficient beyond c3 is nonzero.
GrossNumber sum_poly(std::span<const Rational> coefficients, const GrossNumber& k);
// sum_{i=1..k} r^i = r (1 - r^k) / (1 - r); r^k stays a power atom when k
// is infinite. Throws RatioOne.
ExtendedValue sum_geometric(const Rational& r, const GrossNumber& k);

// (1 + 1/n)^n: a rational for finite n, a display-only SymbolicPower for
// infinite n.
ExtendedValue e_approximant(const GrossNumber& n);

}  // namespace grossone

#endif  // GROSSONE_SEQ_SERIES_HPP
