#ifndef GROSSONE_TESTS_TEST_SUPPORT_HPP
#define GROSSONE_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grossone/gross_number.hpp"
#include "grossone/rational.hpp"

namespace grossone::testing {

inline Rational Q(const std::string& text) { return Rational::Parse(text); }

inline GrossNumber Rat(const std::string& text) { return from_rational(Q(text)); }

// Builds a number from (digit, finite power) pairs without going through the
// parser.
inline GrossNumber Terms(std::initializer_list<std::pair<std::string, std::string>> terms) {
  std::vector<Term> raw;
  for (const auto& [digit, power] : terms) raw.push_back(Term{Rat(power), Q(digit)});
  return GrossNumber::Canonicalize(std::move(raw));
}

inline GrossNumber G() { return GrossNumber::Grossone(); }

// Value of a number with finite integer grosspowers at G := r, computed
// with plain rational arithmetic only.
inline std::optional<Rational> Substitute(const GrossNumber& a, const Rational& r) {
  Rational total;
  for (const auto& t : a.terms()) {
    const auto p = t.power.as_rational();
    if (!p || !p->is_integer()) return std::nullopt;
    total += t.digit * r.pow(static_cast<long>(*p->to_int64()));
  }
  return total;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::int64_t Int(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  Rational Digit(std::int64_t max_num = 50, std::int64_t max_den = 10) {
    std::int64_t n = 0;
    while (n == 0) n = Int(-max_num, max_num);
    return Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(Int(1, max_den))));
  }

  // Up to `max_terms` terms with integer powers in [-max_power, max_power].
  GrossNumber IntegerPowers(int max_terms = 4, int max_power = 3) {
    std::vector<Term> raw;
    const auto n = Int(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i) {
      raw.push_back(Term{from_rational(Rational(static_cast<long>(Int(-max_power, max_power)))), Digit()});
    }
    return GrossNumber::Canonicalize(std::move(raw));
  }

  // Like IntegerPowers, but powers may themselves be small grossnumbers with
  // rational digits, e.g. G^(2G - 1/3).
  GrossNumber Nested(int depth = 2, int max_terms = 4) {
    std::vector<Term> raw;
    const auto n = Int(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i) {
      GrossNumber power = depth > 0 && Int(0, 3) == 0
                              ? Nested(depth - 1, 2)
                              : from_rational(Rational(mpz_class(static_cast<long>(Int(-6, 6))),
                                                       mpz_class(static_cast<long>(Int(1, 2)))));
      raw.push_back(Term{std::move(power), Digit()});
    }
    return GrossNumber::Canonicalize(std::move(raw));
  }

  // Positive rational in [lo, hi].
  Rational Between(std::int64_t lo, std::int64_t hi) {
    return Rational(mpz_class(static_cast<long>(Int(lo, hi))), mpz_class(1)) +
           Rational(mpz_class(static_cast<long>(Int(0, 999))), mpz_class(1000));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace grossone::testing

#endif  // GROSSONE_TESTS_TEST_SUPPORT_HPP
