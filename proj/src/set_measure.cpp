#include "grossone/set_measure.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "grossone/error.hpp"

namespace grossone {

namespace {

GrossNumber G() { return GrossNumber::Grossone(); }

GrossNumber GPower(long p) { return GrossNumber::Monomial(Rational(1), from_rational(Rational(p))); }

Rational ToRational(std::uint64_t v) { return Rational(mpz_class(std::to_string(v)), mpz_class(1)); }

// A set written as a union of residue classes modulo `period`, with finitely
// many members whose membership differs from their class.
struct Lifted {
  std::vector<bool> residues;
  std::map<std::uint64_t, bool> overrides;

  bool contains(std::uint64_t x) const {
    if (const auto it = overrides.find(x); it != overrides.end()) return it->second;
    return residues[x % residues.size()];
  }
};

std::uint64_t Period(const SetExpr& e) {
  switch (e.kind) {
    case SetExpr::Kind::kProgression: return e.progression.step;
    case SetExpr::Kind::kFinite: return 1;
    default: break;
  }
  const std::uint64_t a = Period(e.operands[0]);
  const std::uint64_t b = Period(e.operands[1]);
  const std::uint64_t l = a / std::gcd(a, b);
  if (l > kMaxCardPeriod / b) {
    throw Error(ErrorKind::kUnsupported, "common step of the progressions exceeds " + std::to_string(kMaxCardPeriod));
  }
  return l * b;
}

template <typename Op>
Lifted Combine(const Lifted& a, const Lifted& b, Op op) {
  Lifted out;
  out.residues.resize(a.residues.size());
  for (std::size_t r = 0; r < a.residues.size(); ++r) out.residues[r] = op(a.residues[r], b.residues[r]);
  std::set<std::uint64_t> candidates;
  for (const auto& [x, in] : a.overrides) candidates.insert(x);
  for (const auto& [x, in] : b.overrides) candidates.insert(x);
  for (const std::uint64_t x : candidates) {
    const bool in = op(a.contains(x), b.contains(x));
    if (in != out.residues[x % out.residues.size()]) out.overrides.emplace(x, in);
  }
  return out;
}

Lifted Lift(const SetExpr& e, std::uint64_t period) {
  switch (e.kind) {
    case SetExpr::Kind::kProgression: {
      Lifted out;
      out.residues.resize(period);
      const std::uint64_t step = e.progression.step;
      for (std::uint64_t r = 0; r < period; ++r) out.residues[r] = r % step == e.progression.offset % step;
      return out;
    }
    case SetExpr::Kind::kFinite: {
      Lifted out;
      out.residues.assign(period, false);
      for (const std::uint64_t x : e.elements) out.overrides.emplace(x, true);
      return out;
    }
    case SetExpr::Kind::kUnion:
      return Combine(Lift(e.operands[0], period), Lift(e.operands[1], period), [](bool x, bool y) { return x || y; });
    case SetExpr::Kind::kIntersection:
      return Combine(Lift(e.operands[0], period), Lift(e.operands[1], period), [](bool x, bool y) { return x && y; });
    case SetExpr::Kind::kDifference:
      return Combine(Lift(e.operands[0], period), Lift(e.operands[1], period), [](bool x, bool y) { return x && !y; });
  }
  throw Error(ErrorKind::kInvalidArgument, "malformed set expression");
}

SetExpr MakeNode(SetExpr::Kind kind, SetExpr a, SetExpr b) {
  SetExpr e;
  e.kind = kind;
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

// Extended Euclid on signed 128-bit values: returns g and x with a*x = g (mod b).
__int128 Inverse(__int128 a, __int128 m) {
  __int128 old_r = a % m;
  __int128 r = m;
  __int128 old_s = 1;
  __int128 s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return ((old_s % m) + m) % m;
}

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  SetExpr ParseAll() {
    SetExpr e = ParseUnion();
    SkipSpace();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
  }

  std::uint64_t Number() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected a natural number");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 18) throw SyntaxError(start, "number too large");
    return std::stoull(digits);
  }

  SetExpr ParseUnion() {
    SetExpr lhs = ParseIntersection();
    for (;;) {
      if (Accept('|')) {
        lhs = SetExpr::Union(std::move(lhs), ParseIntersection());
      } else if (Accept('\\')) {
        lhs = SetExpr::Difference(std::move(lhs), ParseIntersection());
      } else {
        return lhs;
      }
    }
  }

  SetExpr ParseIntersection() {
    SetExpr lhs = ParsePrimary();
    while (Accept('&')) lhs = SetExpr::Intersection(std::move(lhs), ParsePrimary());
    return lhs;
  }

  SetExpr ParsePrimary() {
    SkipSpace();
    const std::size_t start = pos_;
    if (Accept('(')) {
      SetExpr inner = ParseUnion();
      Expect(')');
      return inner;
    }
    if (Accept('{')) {
      std::vector<std::uint64_t> elements;
      if (!Accept('}')) {
        do {
          elements.push_back(Number());
        } while (Accept(','));
        Expect('}');
      }
      try {
        return SetExpr::Finite(std::move(elements));
      } catch (const Error& e) {
        throw SyntaxError(start, e.what());
      }
    }
    if (Accept('N')) {
      Expect('(');
      const std::uint64_t k = Number();
      Expect(',');
      const std::uint64_t n = Number();
      Expect(')');
      try {
        return SetExpr::Of(Progression::Make(k, n));
      } catch (const Error& e) {
        throw SyntaxError(start, e.what());
      }
    }
    throw SyntaxError(start, "expected N(k,n), {...} or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Progression Progression::Make(std::uint64_t offset, std::uint64_t step) {
  if (offset < 1 || offset > step) {
    throw Error(ErrorKind::kInvalidArgument,
                "N(" + std::to_string(offset) + "," + std::to_string(step) + ") needs 1 <= k <= n");
  }
  return Progression{offset, step};
}

SetExpr SetExpr::Of(const Progression& p) {
  SetExpr e;
  e.kind = Kind::kProgression;
  e.progression = p;
  return e;
}

SetExpr SetExpr::Finite(std::vector<std::uint64_t> elements) {
  std::set<std::uint64_t> seen;
  for (const std::uint64_t x : elements) {
    if (x == 0) throw Error(ErrorKind::kInvalidArgument, "0 is not a natural number");
    if (!seen.insert(x).second) throw Error(ErrorKind::kInvalidArgument, "repeated element " + std::to_string(x));
  }
  SetExpr e;
  e.kind = Kind::kFinite;
  e.elements = std::move(elements);
  return e;
}

SetExpr SetExpr::Union(SetExpr a, SetExpr b) { return MakeNode(Kind::kUnion, std::move(a), std::move(b)); }
SetExpr SetExpr::Intersection(SetExpr a, SetExpr b) {
  return MakeNode(Kind::kIntersection, std::move(a), std::move(b));
}
SetExpr SetExpr::Difference(SetExpr a, SetExpr b) { return MakeNode(Kind::kDifference, std::move(a), std::move(b)); }

bool SetExpr::contains(std::uint64_t x) const {
  switch (kind) {
    case Kind::kProgression: return progression.contains(x);
    case Kind::kFinite: return std::find(elements.begin(), elements.end(), x) != elements.end();
    case Kind::kUnion: return operands[0].contains(x) || operands[1].contains(x);
    case Kind::kIntersection: return operands[0].contains(x) && operands[1].contains(x);
    case Kind::kDifference: return operands[0].contains(x) && !operands[1].contains(x);
  }
  return false;
}

SetExpr parse_set_expr(std::string_view text) { return SetParser(text).ParseAll(); }

GrossNumber card_progression(const Progression& p) { return scale(G(), Rational(1) / ToRational(p.step)); }

std::optional<Progression> intersect_progressions(const Progression& a, const Progression& b) {
  const std::uint64_t g = std::gcd(a.step, b.step);
  const __int128 k1 = static_cast<__int128>(a.offset % a.step);
  const __int128 k2 = static_cast<__int128>(b.offset % b.step);
  const __int128 diff = k2 - k1;
  if (diff % static_cast<__int128>(g) != 0) return std::nullopt;
  const __int128 n1 = a.step;
  const __int128 m = static_cast<__int128>(b.step / g);
  const __int128 lcm = n1 * m;
  // x = k1 + n1 * t with n1 * t = diff (mod n2)  <=>  (n1/g) t = diff/g (mod n2/g).
  __int128 t = 0;
  if (m > 1) t = (((diff / g) % m + m) % m) * Inverse(n1 / g, m) % m;
  __int128 x = (k1 + n1 * t) % lcm;
  if (x <= 0) x += lcm;
  if (lcm > static_cast<__int128>(UINT64_MAX)) {
    throw Error(ErrorKind::kUnsupported, "intersection step does not fit in 64 bits");
  }
  return Progression{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(lcm)};
}

GrossNumber card(const SetExpr& e) {
  const std::uint64_t period = Period(e);
  const Lifted lifted = Lift(e, period);
  const auto classes = static_cast<std::uint64_t>(std::count(lifted.residues.begin(), lifted.residues.end(), true));
  long correction = 0;
  for (const auto& [x, in] : lifted.overrides) correction += in ? 1 : -1;
  return add(scale(G(), ToRational(classes) / ToRational(period)), from_rational(Rational(correction)));
}

GrossNumber count_by_inverse(const InverseForm& form, const GrossNumber& bound) {
  if (sign(bound) <= 0) throw Error(ErrorKind::kInvalidArgument, "bound must be positive");
  if (const auto* linear = std::get_if<LinearForm>(&form)) {
    if (linear->n <= 0) throw Error(ErrorKind::kUnsupportedForm, "linear form needs n >= 1");
    const GrossNumber x = scale(sub(bound, from_rational(Rational(linear->k))), Rational(1) / Rational(linear->n));
    const GrossNumber count = add(floor(x), from_rational(Rational(1)));
    return sign(count) > 0 ? count : GrossNumber();
  }
  const auto& power = std::get<PowerForm>(form);
  if (power.n <= 0 || power.j == 0) throw Error(ErrorKind::kUnsupportedForm, "power form needs n >= 1 and j >= 1");
  const GrossNumber x = scale(sub(bound, from_rational(Rational(power.k))), Rational(1) / Rational(power.n));
  if (sign(x) <= 0) return {};
  if (const auto r = x.as_rational()) {
    mpz_class root;
    const mpz_class whole = r->floor().numerator();
    mpz_root(root.get_mpz_t(), whole.get_mpz_t(), power.j);
    return from_rational(Rational(root, mpz_class(1)));
  }
  if (!x.is_monomial()) {
    // The leading term decides exactness before the shape is rejected.
    nth_root(GrossNumber::Monomial(x.leading().digit, x.leading().power), power.j);
    throw Error(ErrorKind::kUnsupportedForm, "root of a number with several terms");
  }
  return floor(nth_root(x, power.j));
}

GrossNumber card_tuples(unsigned long m) {
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "tuple length must be at least 1");
  return GPower(static_cast<long>(m));
}

GrossNumber card_integers() { return add(scale(G(), Rational(2)), from_rational(Rational(1))); }

GrossNumber card_Q1() { return mul(card_integers(), scale(G(), Rational(2))); }

GrossNumber card_Q2() { return add(scale(GPower(2), Rational(2)), from_rational(Rational(1))); }

PowAtom card_Rb(std::int64_t b) {
  if (b < 2) throw Error(ErrorKind::kInvalidArgument, "radix must be at least 2");
  return PowAtom{Rational(b), scale(G(), Rational(2))};
}

ExtendedValue card_line(const LinePoints& points) {
  if (const auto* grid = std::get_if<GridLevel>(&points)) {
    if (grid->level != 1 && grid->level != 2) {
      throw Error(ErrorKind::kUnsupportedLevel, "only grid levels 1 and 2 are available");
    }
    return ExtendedValue(scale(GPower(grid->level + 1), Rational(2)));
  }
  const auto radix = std::get<Positional>(points).radix;
  if (radix < 2) throw Error(ErrorKind::kInvalidArgument, "radix must be at least 2");
  return mul(ExtendedValue(scale(G(), Rational(2))), ExtendedValue::Atom(PowAtom{Rational(radix), G()}));
}

}  // namespace grossone
