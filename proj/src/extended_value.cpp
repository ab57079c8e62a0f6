#include "grossone/extended_value.hpp"

#include <algorithm>
#include <utility>

#include "grossone/error.hpp"

namespace grossone {

namespace {

const GrossNumber& One() {
  static const GrossNumber one = from_rational(Rational(1));
  return one;
}

void RejectSymbolic(const ExtendedValue& v) {
  if (v.symbolic()) throw Error(ErrorKind::kUnsupported, "a symbolic power record cannot take part in arithmetic");
}

std::strong_ordering CompareAtoms(const std::vector<PowAtom>& x, const std::vector<PowAtom>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].base <=> y[i].base; c != 0) return c;
    if (auto c = cmp(x[i].exponent, y[i].exponent); c != 0) return c;
  }
  return x.size() <=> y.size();
}

// Sorts atoms by base, merges equal bases, and folds finite integer
// exponents back into the coefficient.
ProductTerm NormalizeTerm(ProductTerm term) {
  std::stable_sort(term.atoms.begin(), term.atoms.end(),
                   [](const PowAtom& a, const PowAtom& b) { return a.base < b.base; });
  std::vector<PowAtom> merged;
  for (auto& atom : term.atoms) {
    if (!merged.empty() && merged.back().base == atom.base) {
      merged.back().exponent = add(merged.back().exponent, atom.exponent);
    } else {
      merged.push_back(std::move(atom));
    }
  }
  std::vector<PowAtom> kept;
  Rational folded(1);
  for (auto& atom : merged) {
    if (atom.exponent.is_zero()) continue;
    if (auto r = atom.exponent.as_rational(); r && r->is_integer()) {
      const auto n = r->to_int64();
      if (!n) throw Error(ErrorKind::kUnsupportedPow, "finite exponent too large to expand");
      folded *= atom.base.pow(*n);
      continue;
    }
    kept.push_back(std::move(atom));
  }
  term.atoms = std::move(kept);
  if (folded != Rational(1)) term.coefficient = scale(term.coefficient, folded);
  return term;
}

enum class Dominance { kDominant, kNegligible, kUndecided };

// Relation of one atom term to GrossNumbers whose grosspowers are finite.
Dominance Classify(const ProductTerm& term) {
  if (term.atoms.empty() || !term.coefficient.has_finite_powers()) return Dominance::kUndecided;
  bool all_up = true;
  bool all_down = true;
  for (const auto& atom : term.atoms) {
    const bool infinite = classify(atom.exponent) == NumberClass::kInfinite;
    all_up = all_up && infinite && sign(atom.exponent) > 0;
    all_down = all_down && infinite && sign(atom.exponent) < 0;
  }
  if (all_up) return Dominance::kDominant;
  if (all_down) return Dominance::kNegligible;
  return Dominance::kUndecided;
}

struct Analysis {
  bool decided = false;
  std::vector<const ProductTerm*> dominant;
  std::vector<const ProductTerm*> negligible;
};

Analysis Analyze(const ExtendedValue& v) {
  Analysis out;
  if (!v.pure_part().has_finite_powers()) return out;
  for (const auto& term : v.terms()) {
    if (term.atoms.empty()) continue;
    switch (Classify(term)) {
      case Dominance::kDominant: out.dominant.push_back(&term); break;
      case Dominance::kNegligible: out.negligible.push_back(&term); break;
      case Dominance::kUndecided: return out;
    }
  }
  out.decided = true;
  return out;
}

ExtendedOrdering FromSign(int s) {
  return s < 0 ? ExtendedOrdering::kLess : (s > 0 ? ExtendedOrdering::kGreater : ExtendedOrdering::kEqual);
}

// Monomial c*G^p raised to a non-integer (or infinite) exponent.
ExtendedValue MonomialPower(const Term& term, const GrossNumber& exponent) {
  std::vector<PowAtom> atoms;
  Rational digit(1);
  const Rational& c = term.digit;
  if (c == Rational(-1)) {
    if (!is_integer(exponent)) throw Error(ErrorKind::kUnsupportedPow, "(-1)^E needs an integer exponent");
    digit = parity(exponent) == Parity::kEven ? Rational(1) : Rational(-1);
  } else if (c.sign() < 0) {
    throw Error(ErrorKind::kUnsupportedPow, "negative base other than -1 with a non-finite exponent");
  } else if (c != Rational(1)) {
    const auto r = exponent.as_rational();
    std::optional<Rational> exact;
    if (r && r->denominator().fits_ulong_p()) {
      if (auto root = c.root(r->denominator().get_ui())) {
        if (auto p = Rational(r->numerator(), mpz_class(1)).to_int64()) exact = root->pow(*p);
      }
    }
    if (exact) {
      digit = *exact;
    } else if (c > Rational(1)) {
      atoms.push_back(PowAtom{c, exponent});
    } else {
      atoms.push_back(PowAtom{c.reciprocal(), neg(exponent)});
    }
  }
  ProductTerm out{GrossNumber::Monomial(digit, mul(term.power, exponent)), std::move(atoms)};
  return ExtendedValue::Canonicalize({std::move(out)});
}

ExtendedValue PowInteger(const ExtendedValue& base, long n, const DivisionOptions& options) {
  if (n < 0) return divide(ExtendedValue(One()), PowInteger(base, -n, options), options);
  ExtendedValue result(One());
  ExtendedValue square = base;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if ((e & 1UL) != 0) result = mul(result, square);
    e >>= 1;
    if (e != 0) square = mul(square, square);
  }
  return result;
}

}  // namespace

std::string_view ExtendedOrderingName(ExtendedOrdering ordering) {
  switch (ordering) {
    case ExtendedOrdering::kLess: return "Less";
    case ExtendedOrdering::kEqual: return "Equal";
    case ExtendedOrdering::kGreater: return "Greater";
    case ExtendedOrdering::kIncomparable: return "Incomparable";
  }
  return "Unknown";
}

ExtendedValue::ExtendedValue(const GrossNumber& value) {
  if (!value.is_zero()) terms_.push_back(ProductTerm{value, {}});
}

ExtendedValue ExtendedValue::Canonicalize(std::vector<ProductTerm> raw) {
  std::vector<ProductTerm> normalized;
  normalized.reserve(raw.size());
  for (auto& term : raw) normalized.push_back(NormalizeTerm(std::move(term)));
  std::stable_sort(normalized.begin(), normalized.end(), [](const ProductTerm& a, const ProductTerm& b) {
    return CompareAtoms(a.atoms, b.atoms) < 0;
  });
  ExtendedValue out;
  for (auto& term : normalized) {
    if (!out.terms_.empty() && out.terms_.back().atoms == term.atoms) {
      out.terms_.back().coefficient = add(out.terms_.back().coefficient, term.coefficient);
    } else {
      out.terms_.push_back(std::move(term));
    }
  }
  std::erase_if(out.terms_, [](const ProductTerm& t) { return t.coefficient.is_zero(); });
  return out;
}

ExtendedValue ExtendedValue::Atom(const PowAtom& atom) {
  if (atom.base <= Rational(1)) throw Error(ErrorKind::kInvalidArgument, "power atom base must exceed 1");
  return Canonicalize({ProductTerm{One(), {atom}}});
}

ExtendedValue ExtendedValue::Symbolic(const SymbolicPower& record) {
  ExtendedValue out;
  out.symbolic_ = record;
  return out;
}

bool ExtendedValue::is_gross() const {
  return !symbolic_ && (terms_.empty() || (terms_.size() == 1 && terms_[0].atoms.empty()));
}

std::optional<GrossNumber> ExtendedValue::as_gross() const {
  if (!is_gross()) return std::nullopt;
  return pure_part();
}

GrossNumber ExtendedValue::pure_part() const {
  if (!terms_.empty() && terms_[0].atoms.empty()) return terms_[0].coefficient;
  return {};
}

ExtendedValue add(const ExtendedValue& a, const ExtendedValue& b) {
  RejectSymbolic(a);
  RejectSymbolic(b);
  std::vector<ProductTerm> all(a.terms());
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return ExtendedValue::Canonicalize(std::move(all));
}

ExtendedValue neg(const ExtendedValue& a) {
  RejectSymbolic(a);
  std::vector<ProductTerm> out(a.terms());
  for (auto& t : out) t.coefficient = neg(t.coefficient);
  return ExtendedValue::Canonicalize(std::move(out));
}

ExtendedValue sub(const ExtendedValue& a, const ExtendedValue& b) { return add(a, neg(b)); }

ExtendedValue mul(const ExtendedValue& a, const ExtendedValue& b) {
  RejectSymbolic(a);
  RejectSymbolic(b);
  std::vector<ProductTerm> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      ProductTerm t{mul(x.coefficient, y.coefficient), x.atoms};
      t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
      out.push_back(std::move(t));
    }
  }
  return ExtendedValue::Canonicalize(std::move(out));
}

ExtendedValue divide(const ExtendedValue& a, const ExtendedValue& b, const DivisionOptions& options) {
  RejectSymbolic(a);
  RejectSymbolic(b);
  if (b.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  if (b.terms().size() != 1) {
    throw Error(ErrorKind::kUnsupported, "division by a sum of terms carrying power atoms");
  }
  const ProductTerm& divisor = b.terms().front();
  std::vector<ProductTerm> out;
  for (const auto& term : a.terms()) {
    const DivisionResult q = div(term.coefficient, divisor.coefficient, options.max_terms);
    if (!q.exact && options.strict) {
      throw Error(ErrorKind::kInexactDivision,
                  "remainder still nonzero after " + std::to_string(options.max_terms) + " quotient terms");
    }
    ProductTerm t{q.quotient, term.atoms};
    for (const auto& atom : divisor.atoms) t.atoms.push_back(PowAtom{atom.base, neg(atom.exponent)});
    out.push_back(std::move(t));
  }
  return ExtendedValue::Canonicalize(std::move(out));
}

ExtendedValue rational_power(const Rational& base, const GrossNumber& exponent) {
  return power(ExtendedValue(from_rational(base)), ExtendedValue(exponent));
}

ExtendedValue power(const ExtendedValue& base, const ExtendedValue& exponent_value, const DivisionOptions& options) {
  RejectSymbolic(base);
  const auto exponent_opt = exponent_value.as_gross();
  if (!exponent_opt) throw Error(ErrorKind::kUnsupportedPow, "exponent must be a grossnumber");
  const GrossNumber& exponent = *exponent_opt;
  if (exponent.is_zero()) return ExtendedValue(One());
  if (base.is_zero()) {
    if (sign(exponent) < 0) throw Error(ErrorKind::kDivisionByZero, "zero raised to a negative power");
    return {};
  }
  const auto finite = exponent.as_rational();
  const std::optional<std::int64_t> n = finite && finite->is_integer() ? finite->to_int64() : std::nullopt;
  if (finite && finite->is_integer() && !n) throw Error(ErrorKind::kUnsupportedPow, "finite exponent too large");

  if (base.terms().size() == 1 && base.terms()[0].coefficient.is_monomial()) {
    const ProductTerm& term = base.terms()[0];
    if (n) {
      const Term& m = term.coefficient.leading();
      ProductTerm out{GrossNumber::Monomial(m.digit.pow(*n), scale(m.power, Rational(*n))), term.atoms};
      for (auto& atom : out.atoms) atom.exponent = scale(atom.exponent, Rational(*n));
      return ExtendedValue::Canonicalize({std::move(out)});
    }
    ExtendedValue out = MonomialPower(term.coefficient.leading(), exponent);
    std::vector<PowAtom> raised;
    for (const auto& atom : term.atoms) raised.push_back(PowAtom{atom.base, mul(atom.exponent, exponent)});
    return mul(out, ExtendedValue::Canonicalize({ProductTerm{One(), std::move(raised)}}));
  }
  if (n) return PowInteger(base, *n, options);
  const auto gross_base = base.as_gross();
  if (gross_base && sign(*gross_base) > 0 && classify(exponent) == NumberClass::kInfinite && sign(exponent) > 0) {
    return ExtendedValue::Symbolic(SymbolicPower{*gross_base, exponent});
  }
  throw Error(ErrorKind::kUnsupportedPow, "non-integer power of a sum of terms");
}

ExtendedOrdering cmp_extended(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.symbolic() || b.symbolic()) return a == b ? ExtendedOrdering::kEqual : ExtendedOrdering::kIncomparable;
  if (a.is_gross() && b.is_gross()) return FromSign(sign(sub(a.pure_part(), b.pure_part())));
  const ExtendedValue d = sub(a, b);
  if (d.is_gross()) return FromSign(sign(d.pure_part()));
  if (d.terms().size() == 1) return FromSign(sign(d.terms()[0].coefficient));
  const Analysis analysis = Analyze(d);
  if (!analysis.decided) return ExtendedOrdering::kIncomparable;
  if (analysis.dominant.size() == 1) return FromSign(sign(analysis.dominant[0]->coefficient));
  if (!analysis.dominant.empty()) return ExtendedOrdering::kIncomparable;
  const GrossNumber pure = d.pure_part();
  if (!pure.is_zero()) return FromSign(sign(pure));
  return ExtendedOrdering::kIncomparable;
}

std::optional<NumberClass> classify_extended(const ExtendedValue& value) {
  if (value.symbolic()) return std::nullopt;
  if (value.is_gross()) return classify(value.pure_part());
  const Analysis analysis = Analyze(value);
  if (!analysis.decided) return std::nullopt;
  if (!analysis.dominant.empty()) return NumberClass::kInfinite;
  switch (classify(value.pure_part())) {
    case NumberClass::kZero:
    case NumberClass::kInfinitesimal: return NumberClass::kInfinitesimal;
    case NumberClass::kFinitePure:
    case NumberClass::kFiniteMixed: return NumberClass::kFiniteMixed;
    case NumberClass::kInfinite: return NumberClass::kInfinite;
  }
  return std::nullopt;
}

}  // namespace grossone
