#include "hodge/w_engine.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hodge {

EtaMultiset::EtaMultiset(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight list must be nonempty");
  for (int w : weights_) {
    if (w < 1) throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
  }
  std::sort(weights_.begin(), weights_.end());
}

EtaMultiset EtaMultiset::ones(int count) {
  if (count < 1) throw std::invalid_argument("weight list must be nonempty");
  return EtaMultiset(Sorted{}, std::vector<int>(static_cast<std::size_t>(count), 1));
}

EtaMultiset EtaMultiset::parse(std::string_view text) {
  std::vector<int> weights;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument("malformed weight list '" + std::string(text) + "'");
    }
    weights.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return EtaMultiset(std::move(weights));
}

long long EtaMultiset::total() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

EtaMultiset EtaMultiset::with_appended(int weight, int count) const {
  std::vector<int> w = weights_;
  w.insert(w.end(), static_cast<std::size_t>(std::max(count, 0)), weight);
  return EtaMultiset(std::move(w));
}

EtaMultiset EtaMultiset::joined(int k, int l) const {
  std::vector<int> w;
  w.reserve(weights_.size() - 1);
  for (int j = 0; j < size(); ++j) {
    if (j != k && j != l) w.push_back(weights_[j]);
  }
  w.insert(std::upper_bound(w.begin(), w.end(), weights_[k] + weights_[l]), weights_[k] + weights_[l]);
  return EtaMultiset(Sorted{}, std::move(w));
}

EtaMultiset EtaMultiset::split(int k, int part) const {
  std::vector<int> w;
  w.reserve(weights_.size() + 1);
  for (int j = 0; j < size(); ++j) {
    if (j != k) w.push_back(weights_[j]);
  }
  for (int p : {part, weights_[k] - part}) {
    w.insert(std::upper_bound(w.begin(), w.end(), p), p);
  }
  return EtaMultiset(Sorted{}, std::move(w));
}

std::string EtaMultiset::str() const {
  std::string s;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (j > 0) s += ',';
    s += std::to_string(weights_[j]);
  }
  return s;
}

bool WKey::is_initial_value() const {
  return (genus == 1 && lambda == 1 && etas.size() == 1) ||
         (genus == 0 && lambda == 0 && etas.size() == 2);
}

std::string WKey::str() const {
  return "W^" + std::to_string(lambda) + "_" + std::to_string(genus) + "(" + etas.str() + ")";
}

WKey canonicalize(std::vector<int> weights, int genus, int lambda) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  return WKey{genus, lambda, EtaMultiset(std::move(weights))};
}

namespace {

void add_term(std::vector<RecursionTerm>& terms, const Rational& coefficient, WKey child,
              long long parent_total) {
  if (child.etas.total() != parent_total) {
    throw std::logic_error("weight not conserved: " + child.str());
  }
  if (coefficient.is_zero() || !child.in_range()) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), child,
                             [](const RecursionTerm& t, const WKey& k) { return t.child < k; });
  if (it != terms.end() && it->child == child) {
    it->coefficient += coefficient;
  } else {
    terms.insert(it, RecursionTerm{coefficient, std::move(child)});
  }
}

}  // namespace

std::vector<RecursionTerm> recursion_terms(const WKey& key) {
  if (key.exponent() <= 0) {
    throw UndefinedExponent("no recursion step for " + key.str() + ": psi exponent " +
                            std::to_string(key.exponent()) + " <= 0");
  }
  const auto& a = key.etas.weights();
  const int n = key.etas.size();
  const long long total = key.etas.total();
  const Rational prefactor = Rational(total * (2LL * key.genus + n - 1));

  std::vector<RecursionTerm> terms;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      add_term(terms, Rational(a[k] + a[l]) / prefactor,
               WKey{key.genus, key.lambda, key.etas.joined(k, l)}, total);
    }
  }
  for (int k = 0; k < n; ++k) {
    const long long ak = a[k];
    add_term(terms, Rational(ak * ak * ak - ak, 12) / prefactor,
             WKey{key.genus - 1, key.lambda - 1, key.etas}, total);
  }
  for (int k = 0; k < n; ++k) {
    for (int part = 1; part < a[k]; ++part) {
      add_term(terms, Rational(static_cast<long long>(part) * (a[k] - part), 2) / prefactor,
               WKey{key.genus - 1, key.lambda, key.etas.split(k, part)}, total);
    }
  }
  std::erase_if(terms, [](const RecursionTerm& t) { return t.coefficient.is_zero(); });
  return terms;
}

std::optional<Rational> MemoCache::find(const WKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const WKey& key, const Rational& value) {
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw std::logic_error("cache conflict for " + key.str() + ": " + it->second.str() + " vs " +
                           value.str());
  }
}

Rational WEngine::evaluate(const WKey& key, MemoCache& cache, const ExpansionObserver* observer) {
  if (!key.in_range()) return Rational{};
  if (auto hit = cache.find(key)) return *hit;

  Rational result;
  if (key.exponent() <= 0) {
    const auto& a = key.etas.weights();
    if (key.genus == 1 && key.lambda == 1 && key.etas.size() == 1) {
      const long long w = a[0];
      result = Rational(w * w - 1, 24);
    } else if (key.genus == 0 && key.lambda == 0 && key.etas.size() == 2) {
      result = Rational(1);
    } else {
      throw UndefinedExponent("undefined integrand exponent " + std::to_string(key.exponent()) +
                              " for " + key.str());
    }
  } else {
    const auto terms = recursion_terms(key);
    if (observer != nullptr && *observer) (*observer)(key, terms);
    for (const auto& term : terms) {
      result += term.coefficient * evaluate(term.child, cache, observer);
    }
  }
  cache.insert(key, result);
  return result;
}

Rational WEngine::value(const WKey& key) { return evaluate(key, cache_, &observer_); }

Rational w_value(const WKey& key, MemoCache& cache) { return WEngine::evaluate(key, cache, nullptr); }

}  // namespace hodge
