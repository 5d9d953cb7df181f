#pragma once

#include <mutex>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Bernoulli numbers B_m with B_1 = -1/2, grown on demand from
/// sum_{k=0}^{m} C(m+1, k) B_k = 0. Thread-safe.
class BernoulliTable {
 public:
  Rational operator()(unsigned m);

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

/// B_m from a process-wide table.
Rational bernoulli(unsigned m);

}  // namespace hodge
