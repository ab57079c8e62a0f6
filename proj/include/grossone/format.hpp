#ifndef GROSSONE_FORMAT_HPP
#define GROSSONE_FORMAT_HPP

#include <string>

#include "grossone/extended_value.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/rational.hpp"

namespace grossone {

struct FormatOptions {
  enum class Mode { kExact, kDecimal };

  Mode mode = Mode::kExact;
  // Significant digits in decimal mode.
  int digits = 5;

  static FormatOptions Exact() { return {}; }
  static FormatOptions Decimal(int digits) { return {Mode::kDecimal, digits}; }
};

// Canonical text, e.g. "16.5G^44.2 - 12G^12 + 6.23G^3 + 27.1 + 15G^-4.1".
//
//   * terms by decreasing power, joined with " + " / " - ";
//   * digits as minimal terminating decimals; other fractions p/q are
//     written "pG^e/q" (so 1/55 G prints as "G/55");
//   * unit digits are dropped before G, G^0 is dropped, G^1 prints as G;
//   * grosspowers that are not plain decimals are parenthesised,
//     recursively: "G^(G^-1)", "G^(1/3)";
//   * power atoms print as "b^(exponent)", products with "*";
//   * zero prints as "0".
//
// Exact output parses back to the same value. Decimal mode rounds digits
// to FormatOptions::digits significant digits and is for display only.
std::string format(const GrossNumber& value, const FormatOptions& options = {});
std::string format(const ExtendedValue& value, const FormatOptions& options = {});
std::string format(const Rational& value, const FormatOptions& options = {});

}  // namespace grossone

#endif  // GROSSONE_FORMAT_HPP
