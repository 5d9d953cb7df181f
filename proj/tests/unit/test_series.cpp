#include <gtest/gtest.h>

#include <random>

#include "hodge/series.hpp"

using hodge::Rational;
using hodge::Series;

TEST(Series, GeometricInverse) {
  Series one_minus_t(6, {Rational(1), Rational(-1)});
  const Series inv = one_minus_t.inverse();
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(inv[k], Rational(1));
  EXPECT_EQ(inv * one_minus_t, Series::constant(6, 1));
}

TEST(Series, Product) {
  const Series a(5, {Rational(1), Rational(1)});
  const Series b(5, {Rational(1), Rational(-1)});
  EXPECT_EQ(a * b, Series(5, {Rational(1), Rational(0), Rational(-1)}));
  EXPECT_EQ(hodge::series_combine(a, b, hodge::SeriesOp::add), Series::constant(5, 2));
}

TEST(Series, OrderMismatch) {
  EXPECT_THROW(Series(3) + Series(4), std::invalid_argument);
  EXPECT_THROW(Series(3) * Series(4), std::invalid_argument);
  EXPECT_THROW(Series(0), std::invalid_argument);
}

TEST(Series, InverseNeedsUnit) {
  EXPECT_THROW(Series::variable(4).inverse(), hodge::ArithmeticError);
  EXPECT_THROW(hodge::series_log(Series::constant(4, 2)), hodge::ArithmeticError);
  EXPECT_THROW(hodge::series_exp(Series::constant(4, 1)), hodge::ArithmeticError);
}

TEST(Series, ExpOfT) {
  const Series e = hodge::series_exp(Series::variable(10));
  Rational fact(1);
  for (unsigned m = 0; m < 10; ++m) {
    if (m > 0) fact *= Rational(static_cast<long long>(m));
    EXPECT_EQ(e[m], fact.reciprocal()) << m;
  }
}

TEST(Series, LogOfOnePlusT) {
  const Series l = hodge::series_log(Series(8, {Rational(1), Rational(1)}));
  EXPECT_EQ(l[0], Rational(0));
  for (long long m = 1; m < 8; ++m) EXPECT_EQ(l[m], Rational(m % 2 ? 1 : -1, m));
}

TEST(Series, DerivativeIntegral) {
  const Series s(5, {Rational(3), Rational(2), Rational(1, 2), Rational(4)});
  EXPECT_EQ(s.derivative(), Series(5, {Rational(2), Rational(1), Rational(12)}));
  EXPECT_EQ(s.derivative().integral() + Series::constant(5, 3), s);
}

TEST(Series, Pow) {
  const Series s(6, {Rational(1), Rational(1)});
  EXPECT_EQ(s.pow(3), Series(6, {Rational(1), Rational(3), Rational(3), Rational(1)}));
  EXPECT_EQ(s.pow(0), Series::constant(6, 1));
}

TEST(Series, Truncation) {
  const Series t = Series::variable(3);
  EXPECT_EQ(t * t * t, Series(3));
  EXPECT_EQ(t.coefficient(7), Rational(0));
  EXPECT_THROW(t[3], std::out_of_range);
}

// exp(log(s)) == s and log(exp(f)) == f for random s, f.
TEST(Series, ExpLogRoundTripRandomized) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long long> num(-9, 9), den(1, 6);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = order(rng);
    Series s = Series::constant(n, 1);
    Series f(n);
    for (std::size_t k = 1; k < n; ++k) {
      s.set(k, Rational(num(rng), den(rng)));
      f.set(k, Rational(num(rng), den(rng)));
    }
    EXPECT_EQ(hodge::series_exp(hodge::series_log(s)), s);
    EXPECT_EQ(hodge::series_log(hodge::series_exp(f)), f);
    EXPECT_EQ(s / s, Series::constant(n, 1));
  }
}
