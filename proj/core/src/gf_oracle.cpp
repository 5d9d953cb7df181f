#include "hodge/gf_oracle.hpp"

#include <stdexcept>

#include "hodge/bernoulli.hpp"

namespace hodge {

Series sine_kernel(std::size_t order_bound) {
  // sin(t/2)/(t/2) = sum_m (-1)^m (t/2)^{2m} / (2m+1)!
  Series sinc(order_bound);
  for (std::size_t m = 0; 2 * m < order_bound; ++m) {
    Rational c = (Rational(1) / factorial(static_cast<unsigned>(2 * m + 1))) *
                 Rational(1, 2).pow(static_cast<int>(2 * m));
    if (m % 2 == 1) c = -c;
    sinc.set(2 * m, c);
  }
  return sinc.inverse();
}

BivariateGF::BivariateGF(int k_degree_bound, std::vector<Series> by_k_power)
    : k_degree_bound_(k_degree_bound), by_k_(std::move(by_k_power)) {
  if (k_degree_bound_ < 0 || by_k_.size() != static_cast<std::size_t>(k_degree_bound_) + 1) {
    throw std::invalid_argument("k-coefficient count does not match degree bound");
  }
  for (const auto& s : by_k_) {
    if (s.order_bound() != by_k_.front().order_bound()) {
      throw std::invalid_argument("k-coefficients must share one order bound");
    }
  }
}

Rational BivariateGF::coefficient(int t_power, int k_power) const {
  if (k_power < 0 || k_power > k_degree_bound_ || t_power < 0) return Rational{};
  return by_k_[static_cast<std::size_t>(k_power)].coefficient(static_cast<std::size_t>(t_power));
}

BivariateGF gf_expand(int g_max) {
  if (g_max < 1) throw std::invalid_argument("gf_expand needs g_max >= 1");
  const auto order = static_cast<std::size_t>(2 * g_max + 2);
  const Series kernel = sine_kernel(order);
  const Series log_kernel = series_log(kernel);
  // K^{k+1} = K * exp(k log K) = sum_j k^j K (log K)^j / j!.
  // log K = O(t^2), so terms with j > g_max vanish modulo t^{2 g_max + 2}.
  std::vector<Series> by_k;
  Series power = Series::constant(order, 1);
  for (int j = 0; j <= g_max; ++j) {
    by_k.push_back(kernel * power * (Rational(1) / factorial(static_cast<unsigned>(j))));
    power *= log_kernel;
  }
  return BivariateGF(g_max, std::move(by_k));
}

Rational oracle_integral(int genus, int lambda, const BivariateGF& gf) {
  if (genus < 1 || static_cast<std::size_t>(2 * genus) >= gf.order_bound()) {
    throw std::out_of_range("genus " + std::to_string(genus) + " not resolved by the expansion");
  }
  if (lambda < 0 || lambda > genus) throw std::out_of_range("lambda index must satisfy 0 <= i <= g");
  return gf.coefficient(2 * genus, genus - lambda);
}

Rational bernoulli_rhs(int genus) {
  if (genus < 1) throw std::invalid_argument("bernoulli_rhs needs g >= 1");
  const auto g = static_cast<unsigned>(genus);
  const Rational p = Rational(2).pow(2 * genus - 1);
  return (p - 1) * factorial(g) / (p * factorial(2 * g)) * bernoulli(2 * g).abs();
}

}  // namespace hodge
