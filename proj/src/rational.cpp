#include "grossone/rational.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <utility>

#include "grossone/error.hpp"

namespace grossone {

namespace {

mpz_class PowTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

// Multiplicity of prime p in n (n > 0); n is divided out in place.
unsigned long StripFactor(mpz_class& n, unsigned long p) {
  unsigned long count = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++count;
  }
  return count;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw Error(ErrorKind::kDivisionByZero, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::Parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw Error(ErrorKind::kInvalidArgument, "malformed fraction '" + original + "'");
    }
    result = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  } else {
    const auto dot = text.find('.');
    const auto whole = text.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    const bool ok = dot == std::string_view::npos ? AllDigits(whole)
                                                  : (whole.empty() || AllDigits(whole)) &&
                                                        (frac.empty() || AllDigits(frac)) &&
                                                        !(whole.empty() && frac.empty());
    if (!ok) throw Error(ErrorKind::kInvalidArgument, "malformed number '" + original + "'");
    const std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), PowTen(frac.size()));
  }
  return negative ? -result : result;
}

Rational Rational::PowerOfTen(long exponent) {
  const mpz_class p = PowTen(static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return Rational(q, mpz_class(1));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::optional<Rational> Rational::root(unsigned long j) const {
  if (j == 0) throw Error(ErrorKind::kInvalidArgument, "zeroth root");
  if (sign() < 0 && j % 2 == 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  const mpz_class abs_num = ::abs(numerator());
  if (mpz_root(num.get_mpz_t(), abs_num.get_mpz_t(), j) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), denominator().get_mpz_t(), j) == 0) return std::nullopt;
  if (sign() < 0) num = -num;
  return Rational(num, den);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer() || !numerator().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(numerator().get_si());
}

bool Rational::is_terminating_decimal() const {
  mpz_class den = denominator();
  StripFactor(den, 2);
  StripFactor(den, 5);
  return den == 1;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal_string() const {
  if (!is_terminating_decimal()) {
    throw Error(ErrorKind::kInvalidArgument, to_string() + " has no terminating decimal expansion");
  }
  if (is_integer()) return numerator().get_str();
  mpz_class den = denominator();
  const unsigned long twos = StripFactor(den, 2);
  const unsigned long fives = StripFactor(den, 5);
  const unsigned long scale = std::max(twos, fives);
  const mpz_class scaled = ::abs(numerator()) * PowTen(scale) / denominator();
  std::string digits = scaled.get_str();
  if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
  digits.insert(digits.size() - scale, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (sign() < 0 ? "-" : "") + digits;
}

std::string Rational::to_significant_string(int digits) const {
  if (digits < 1) throw Error(ErrorKind::kInvalidArgument, "significant digits must be positive");
  if (is_zero()) return "0";
  const Rational magnitude = abs();
  // Find e with 10^e <= |x| < 10^(e+1).
  long e = static_cast<long>(numerator().get_str().size()) - (sign() < 0 ? 1 : 0) -
           static_cast<long>(denominator().get_str().size());
  while (PowerOfTen(e) > magnitude) --e;
  while (PowerOfTen(e + 1) <= magnitude) ++e;
  const Rational scaled = magnitude * PowerOfTen(digits - 1 - e);
  mpz_class rounded = (scaled + Rational(mpz_class(1), mpz_class(2))).floor().numerator();
  long exponent = e - digits + 1;
  if (rounded == PowTen(static_cast<unsigned long>(digits))) {
    rounded /= 10;
    ++exponent;
  }
  const Rational shown = Rational(rounded, mpz_class(1)) * PowerOfTen(exponent);
  return (sign() < 0 ? "-" : "") + shown.to_decimal_string();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division of a rational by zero");
  value_ /= other.value_;
  return *this;
}

}  // namespace grossone
