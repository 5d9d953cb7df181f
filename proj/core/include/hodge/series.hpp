#pragma once

/// @file series.hpp
/// @brief Truncated power series in one variable t with exact coefficients.
///
/// A Series of order bound N represents an element of Q[[t]] / (t^N).
/// Binary operations require both operands to share the same order bound.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

class Series {
 public:
  /// The zero series modulo t^order_bound; order_bound must be positive.
  explicit Series(std::size_t order_bound);
  /// Coefficients past the order bound are dropped; missing ones are zero.
  Series(std::size_t order_bound, std::vector<Rational> coefficients);

  static Series constant(std::size_t order_bound, const Rational& c);
  /// The series t (zero when order_bound == 1).
  static Series variable(std::size_t order_bound);

  std::size_t order_bound() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t power) const { return coeffs_.at(power); }
  /// Zero for powers at or beyond the order bound.
  Rational coefficient(std::size_t power) const;
  void set(std::size_t power, Rational value);
  std::span<const Rational> coefficients() const { return coeffs_; }

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator/=(const Series& rhs);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Series& rhs) { return lhs *= rhs; }
  friend Series operator/(Series lhs, const Series& rhs) { return lhs /= rhs; }
  friend Series operator*(Series lhs, const Rational& s) { return lhs *= s; }
  friend Series operator*(const Rational& s, Series rhs) { return rhs *= s; }

  friend bool operator==(const Series&, const Series&) = default;

  /// Multiplicative inverse; throws ArithmeticError if the constant term is 0.
  Series inverse() const;
  Series derivative() const;
  /// Formal antiderivative with zero constant term.
  Series integral() const;
  Series pow(unsigned exponent) const;

  std::string str() const;

 private:
  void require_same_order(const Series& rhs) const;

  std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, mul, div };

Series series_combine(const Series& lhs, const Series& rhs, SeriesOp kind);

/// log(s) for s with constant term 1; otherwise ArithmeticError.
Series series_log(const Series& s);
/// exp(s) for s with constant term 0; otherwise ArithmeticError.
Series series_exp(const Series& s);

}  // namespace hodge
