#pragma once

/// @file gf_oracle.hpp
/// @brief Closed-form oracle: expansion of ((t/2)/sin(t/2))^{k+1}.
///
/// The t^{2g} k^j coefficient equals int_{M_{g,1}} psi_1^{2g-2+j} lambda_{g-j}.
/// This module shares nothing with the W-number recursion.

#include <vector>

#include "hodge/rational.hpp"
#include "hodge/series.hpp"

namespace hodge {

/// (t/2)/sin(t/2) modulo t^order_bound.
Series sine_kernel(std::size_t order_bound);

/// Polynomial in k (degree <= k_degree_bound) with t-series coefficients.
class BivariateGF {
 public:
  BivariateGF(int k_degree_bound, std::vector<Series> by_k_power);

  int k_degree_bound() const { return k_degree_bound_; }
  std::size_t order_bound() const { return by_k_.front().order_bound(); }
  const Series& k_coefficient(int k_power) const { return by_k_.at(static_cast<std::size_t>(k_power)); }
  /// Coefficient of t^t_power k^k_power; zero outside the stored range.
  Rational coefficient(int t_power, int k_power) const;

 private:
  int k_degree_bound_;
  std::vector<Series> by_k_;
};

/// exp((k+1) log K) with K the sine kernel, modulo t^{2 g_max + 2}.
BivariateGF gf_expand(int g_max);

/// int psi_1^{3g-2-i} lambda_i read from the t^{2g} k^{g-i} coefficient.
/// Throws std::out_of_range when g exceeds what `gf` resolves or i is not
/// in [0, g].
Rational oracle_integral(int genus, int lambda, const BivariateGF& gf);

/// (2^{2g-1} - 1) g! / (2^{2g-1} (2g)!) * |B_{2g}|.
Rational bernoulli_rhs(int genus);

}  // namespace hodge
