#ifndef GROSSONE_SET_MEASURE_HPP
#define GROSSONE_SET_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "grossone/extended_value.hpp"
#include "grossone/gross_number.hpp"

namespace grossone {

// N_{k,n} = {k, k+n, k+2n, ...}, the k-th of the n parts of the naturals.
struct Progression {
  std::uint64_t offset = 1;
  std::uint64_t step = 1;

  // Throws InvalidArgument unless 1 <= offset <= step.
  static Progression Make(std::uint64_t offset, std::uint64_t step);

  bool contains(std::uint64_t x) const { return x >= offset && (x - offset) % step == 0; }

  friend bool operator==(const Progression&, const Progression&) = default;
};

// Boolean combination of progressions and finite sets of naturals.
struct SetExpr {
  enum class Kind { kProgression, kFinite, kUnion, kIntersection, kDifference };

  Kind kind = Kind::kFinite;
  Progression progression;
  std::vector<std::uint64_t> elements;
  std::vector<SetExpr> operands;

  static SetExpr Of(const Progression& p);
  // Throws InvalidArgument on zero or repeated elements.
  static SetExpr Finite(std::vector<std::uint64_t> elements);
  static SetExpr Union(SetExpr a, SetExpr b);
  static SetExpr Intersection(SetExpr a, SetExpr b);
  static SetExpr Difference(SetExpr a, SetExpr b);

  bool contains(std::uint64_t x) const;
};

// `N(k,n)`, `{a,b,c}`, `&` (binds tightest), `|` and `\` (left-assoc),
// parentheses. Throws SyntaxError.
SetExpr parse_set_expr(std::string_view text);

// G/n.
GrossNumber card_progression(const Progression& p);

// Chinese-remainder intersection; nullopt when the residues are incompatible.
std::optional<Progression> intersect_progressions(const Progression& a, const Progression& b);

// Exact element count. All progressions are lifted to the lcm of their steps,
// where the set becomes a union of residue classes (each with G/lcm
// elements) corrected by finitely many explicit members or non-members.
// Throws Unsupported when that period exceeds kMaxCardPeriod.
GrossNumber card(const SetExpr& e);
inline constexpr std::uint64_t kMaxCardPeriod = std::uint64_t{1} << 22;

// Sets {g(i) : g(i) <= bound} counted through the inverse of g.
struct LinearForm {  // g(i) = k + n(i - 1), i >= 1
  std::int64_t k;
  std::int64_t n;
};
struct PowerForm {  // g(i) = k + n i^j, i >= 0
  std::int64_t k;
  std::int64_t n;
  unsigned long j;
};
using InverseForm = std::variant<LinearForm, PowerForm>;

// floor(g^-1(bound)). Throws InexactRoot when the root of the leading term is
// irrational and UnsupportedForm when the root or its integer part has no
// exact positional record.
GrossNumber count_by_inverse(const InverseForm& form, const GrossNumber& bound);

// m-tuples of naturals: G^m.
GrossNumber card_tuples(unsigned long m);
// Integers: 2G + 1.
GrossNumber card_integers();
// Numerals p/q with p an integer and q a nonzero integer, counted as
// written: (2G + 1) * 2G = 4G^2 + 2G.
GrossNumber card_Q1();
// Numerals p/q and -p/q with p, q natural, plus a single 0: 2G^2 + 1.
GrossNumber card_Q2();
// Numerals with G integer and G fractional digits in radix b: b^(2G).
PowAtom card_Rb(std::int64_t b);

struct GridLevel {
  int level;
};
struct Positional {
  std::int64_t radix;
};
using LinePoints = std::variant<GridLevel, Positional>;

// Points on the whole line: 2G^2 (grid 1/G), 2G^3 (grid 1/G^2) or 2G*b^G
// (positional numerals with G fractional digits). Throws UnsupportedLevel.
ExtendedValue card_line(const LinePoints& points);

}  // namespace grossone

#endif  // GROSSONE_SET_MEASURE_HPP
