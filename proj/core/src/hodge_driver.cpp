#include "hodge/hodge_driver.hpp"

#include <stdexcept>

namespace hodge {

HodgeQuery make_query(int genus, int lambda, EtaMultiset aux) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  if (lambda < 0 || lambda > genus) {
    throw std::invalid_argument("lambda index must satisfy 0 <= i <= g");
  }
  return HodgeQuery{genus, lambda, std::move(aux)};
}

std::vector<DecompositionTerm> binomial_terms(const HodgeQuery& q) {
  std::vector<DecompositionTerm> terms;
  terms.reserve(static_cast<std::size_t>(q.genus) + 1);
  for (int j = 0; j <= q.genus; ++j) {
    Rational c = binomial(static_cast<unsigned>(q.genus), static_cast<unsigned>(j));
    if (j % 2 == 1) c = -c;
    terms.push_back({std::move(c), WKey{q.genus, q.lambda, q.aux.with_appended(1, j)}});
  }
  return terms;
}

Rational hodge_integral(const HodgeQuery& q, WEngine& engine) {
  (void)make_query(q.genus, q.lambda, q.aux);
  Rational sum;
  for (const auto& term : binomial_terms(q)) sum += term.sign_coefficient * engine.value(term.key);
  Rational norm = factorial(static_cast<unsigned>(q.genus));
  if (q.genus % 2 == 1) norm = -norm;
  return sum / norm;
}

Rational hodge_integral(const HodgeQuery& q) {
  WEngine engine;
  return hodge_integral(q, engine);
}

std::vector<HodgeRow> hodge_table(int g_max, WEngine& engine) {
  if (g_max < 1) throw std::invalid_argument("table needs g_max >= 1");
  std::vector<HodgeRow> rows;
  for (int g = 1; g <= g_max; ++g) {
    for (int i = 0; i <= g; ++i) {
      rows.push_back({g, i, 3 * g - 2 - i, hodge_integral(make_query(g, i), engine)});
    }
  }
  return rows;
}

}  // namespace hodge
