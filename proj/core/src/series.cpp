#include "hodge/series.hpp"

#include <sstream>
#include <stdexcept>

namespace hodge {

Series::Series(std::size_t order_bound) : coeffs_(order_bound) {
  if (order_bound == 0) throw std::invalid_argument("series order bound must be positive");
}

Series::Series(std::size_t order_bound, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (order_bound == 0) throw std::invalid_argument("series order bound must be positive");
  coeffs_.resize(order_bound);
}

Series Series::constant(std::size_t order_bound, const Rational& c) {
  Series s(order_bound);
  s.coeffs_[0] = c;
  return s;
}

Series Series::variable(std::size_t order_bound) {
  Series s(order_bound);
  if (order_bound > 1) s.coeffs_[1] = 1;
  return s;
}

Rational Series::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

void Series::set(std::size_t power, Rational value) { coeffs_.at(power) = std::move(value); }

void Series::require_same_order(const Series& rhs) const {
  if (rhs.order_bound() != order_bound()) {
    throw std::invalid_argument("series order bounds differ: " + std::to_string(order_bound()) +
                                " vs " + std::to_string(rhs.order_bound()));
  }
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  require_same_order(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!rhs.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Series& Series::operator/=(const Series& rhs) {
  require_same_order(rhs);
  return *this *= rhs.inverse();
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series Series::inverse() const {
  if (coeffs_[0].is_zero()) throw ArithmeticError("series with zero constant term is not invertible");
  const std::size_t n = coeffs_.size();
  Series out(n);
  const Rational c0_inv = coeffs_[0].reciprocal();
  out.coeffs_[0] = c0_inv;
  // b_m = -(1/a_0) * sum_{k=1}^{m} a_k b_{m-k}
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * out.coeffs_[m - k];
    }
    out.coeffs_[m] = -acc * c0_inv;
  }
  return out;
}

Series Series::derivative() const {
  Series out(order_bound());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long long>(k));
  }
  return out;
}

Series Series::integral() const {
  Series out(order_bound());
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    out.coeffs_[k + 1] = coeffs_[k] / Rational(static_cast<long long>(k + 1));
  }
  return out;
}

Series Series::pow(unsigned exponent) const {
  Series result = constant(order_bound(), 1);
  Series base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "*t^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << coeffs_.size() << ")";
  return os.str();
}

Series series_combine(const Series& lhs, const Series& rhs, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add: return lhs + rhs;
    case SeriesOp::mul: return lhs * rhs;
    case SeriesOp::div: return lhs / rhs;
  }
  throw std::invalid_argument("unknown series operation");
}

Series series_log(const Series& s) {
  if (s[0] != Rational(1)) throw ArithmeticError("series log requires constant term 1");
  return (s.derivative() / s).integral();
}

Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw ArithmeticError("series exp requires constant term 0");
  const std::size_t n = s.order_bound();
  // f = exp(s) satisfies f' = s' f, so m f_m = sum_{k=1}^{m} k s_k f_{m-k}.
  std::vector<Rational> f(n);
  f[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!s[k].is_zero()) acc += Rational(static_cast<long long>(k)) * s[k] * f[m - k];
    }
    f[m] = acc / Rational(static_cast<long long>(m));
  }
  return Series(n, std::move(f));
}

}  // namespace hodge
