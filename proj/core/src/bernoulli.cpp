#include "hodge/bernoulli.hpp"

namespace hodge {

Rational BernoulliTable::operator()(unsigned m) {
  std::lock_guard lock(mutex_);
  while (values_.size() <= m) {
    const auto next = static_cast<unsigned>(values_.size());
    if (next == 0) {
      values_.emplace_back(1);
      continue;
    }
    Rational acc;
    for (unsigned k = 0; k < next; ++k) {
      if (!values_[k].is_zero()) acc += binomial(next + 1, k) * values_[k];
    }
    values_.push_back(-acc / Rational(static_cast<long long>(next) + 1));
  }
  return values_[m];
}

Rational bernoulli(unsigned m) {
  static BernoulliTable table;
  return table(m);
}

}  // namespace hodge
