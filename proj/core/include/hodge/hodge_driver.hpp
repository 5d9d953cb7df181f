#pragma once

/// @file hodge_driver.hpp
/// @brief Hodge integrals int_{M_{g,1}} psi_1^{3g-2-i} lambda_i from W-numbers.
///
/// For any auxiliary weights (a_1..a_n),
///   (-1)^g g! int psi_1^{3g-2-i} lambda_i = sum_{j=0}^{g} (-1)^j C(g,j) W^i_g(eta_1^j prod eta_{a_m}).

#include <vector>

#include "hodge/rational.hpp"
#include "hodge/w_engine.hpp"

namespace hodge {

struct HodgeQuery {
  int genus = 1;
  int lambda = 0;
  EtaMultiset aux = EtaMultiset::ones(1);
};

/// Throws std::invalid_argument unless g >= 1 and 0 <= i <= g.
HodgeQuery make_query(int genus, int lambda, EtaMultiset aux = EtaMultiset::ones(1));

struct DecompositionTerm {
  Rational sign_coefficient;  // (-1)^j C(g, j)
  WKey key;                   // W^i_g(eta_1^j * aux)
};

std::vector<DecompositionTerm> binomial_terms(const HodgeQuery& q);

/// The integral itself: the signed W-sum divided by (-1)^g g!.
Rational hodge_integral(const HodgeQuery& q, WEngine& engine);
Rational hodge_integral(const HodgeQuery& q);

struct HodgeRow {
  int genus;
  int lambda;
  int psi_power;  // 3g - 2 - i
  Rational value;
};

/// All (g, i) with 1 <= g <= g_max, 0 <= i <= g, sorted by (g, i).
std::vector<HodgeRow> hodge_table(int g_max, WEngine& engine);

}  // namespace hodge
