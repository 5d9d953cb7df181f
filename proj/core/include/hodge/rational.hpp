#pragma once

/// @file rational.hpp
/// @brief Exact reduced fractions over arbitrary-precision integers.
///
/// Every numeric value in the library is a Rational. Values are always kept
/// in canonical form: positive denominator and gcd(|num|, den) = 1. The text
/// form is "p/q", or just "p" when q = 1.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodge {

/// Raised on division by zero and other undefined rational operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);               // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Parses "p/q" or "p" (optional leading '-'). Non-reduced input is
  /// accepted and reduced; malformed text throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_canonical() const;

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(int exponent) const;

  std::string str() const;
  /// Fixed-point rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

enum class ArithOp { add, sub, mul, div };

/// Applies one of the four field operations; `div` by zero throws
/// ArithmeticError.
Rational rational_arithmetic(const Rational& lhs, const Rational& rhs, ArithOp kind);

/// Exact binomial coefficient C(n, k) for 0 <= k; zero when k > n.
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

}  // namespace hodge
