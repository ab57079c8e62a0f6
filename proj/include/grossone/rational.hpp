#ifndef GROSSONE_RATIONAL_HPP
#define GROSSONE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grossone {

// Exact fraction in lowest terms with a positive denominator. Grossdigits
// live here; nothing in the library ever rounds a Rational.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  // Accepts "-12", "16.5", "0.125", "-33/2". Decimals are read exactly.
  static Rational Parse(std::string_view text);
  static Rational PowerOfTen(long exponent);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }
  bool is_even_integer() const { return is_integer() && mpz_even_p(numerator().get_mpz_t()) != 0; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational reciprocal() const;
  Rational floor() const;
  // Integer exponent; a negative exponent on zero throws DivisionByZero.
  Rational pow(long exponent) const;
  // Exact j-th root, or nullopt when the root is irrational (or does not
  // exist in the reals).
  std::optional<Rational> root(unsigned long j) const;

  // Fits in a signed 64-bit integer (used for finite exponents).
  std::optional<std::int64_t> to_int64() const;

  // Denominator has no prime factors other than 2 and 5.
  bool is_terminating_decimal() const;
  // "p" or "p/q".
  std::string to_string() const;
  // Minimal exact decimal; requires is_terminating_decimal().
  std::string to_decimal_string() const;
  // Rounded to `digits` significant digits, half away from zero, trailing
  // zeros removed.
  std::string to_significant_string(int digits) const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

}  // namespace grossone

#endif  // GROSSONE_RATIONAL_HPP
