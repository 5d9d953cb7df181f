#pragma once

/// @file w_engine.hpp
/// @brief Memoized evaluation of the W-numbers W^i_g(eta_{a_1} ... eta_{a_n}).
///
/// W^i_g is the integral of psi_1^{2g+n-2-i} lambda_i over the closure of
/// the two-pointed ramification locus with pole/zero profile (a_1..a_n). The
/// engine treats it as the rational defined by the cut-and-join recursion
///
///   N (2g+n-1) W^i_g(a) = sum_{k<l} (a_k+a_l) W^i_g(a with a_k,a_l joined)
///                       + sum_k (a_k^3-a_k)/12 W^{i-1}_{g-1}(a)
///                       + 1/2 sum_k sum_{a'+a''=a_k} a'a'' W^i_{g-1}(a with a_k split)
///
/// (N = sum a_j) together with the initial values W^1_1(eta_a) = (a^2-1)/24,
/// W^0_0(eta_a eta_b) = 1 and W = 0 whenever i < 0, i > g or g < 0.
/// For i = g the split family is identically zero and the recursion reduces
/// to the two-term lambda_g relation.

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Raised when a query has psi-exponent <= 0 but is not an initial value.
class UndefinedExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sorted, nonempty multiset of positive weights.
class EtaMultiset {
 public:
  /// Sorts the weights; throws std::invalid_argument on an empty list or a
  /// weight < 1.
  explicit EtaMultiset(std::vector<int> weights);

  static EtaMultiset ones(int count);
  /// Parses "a1,a2,...".
  static EtaMultiset parse(std::string_view text);

  std::span<const int> weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }
  long long total() const;

  /// This multiset with `count` extra copies of `weight`.
  EtaMultiset with_appended(int weight, int count) const;
  /// Replaces positions k < l by their sum.
  EtaMultiset joined(int k, int l) const;
  /// Replaces position k by the parts `part` and weights()[k] - part.
  EtaMultiset split(int k, int part) const;

  std::string str() const;

  friend auto operator<=>(const EtaMultiset&, const EtaMultiset&) = default;
  friend bool operator==(const EtaMultiset&, const EtaMultiset&) = default;

 private:
  struct Sorted {};
  EtaMultiset(Sorted, std::vector<int> weights) : weights_(std::move(weights)) {}

  std::vector<int> weights_;
};

struct WKey {
  int genus = 0;
  int lambda = 0;
  EtaMultiset etas = EtaMultiset::ones(1);

  /// Power of psi_1 in the integrand: 2g + n - 2 - i.
  int exponent() const { return 2 * genus + etas.size() - 2 - lambda; }
  /// False when the zero convention (i < 0, i > g, g < 0) applies.
  bool in_range() const { return genus >= 0 && lambda >= 0 && lambda <= genus; }
  bool is_initial_value() const;

  std::string str() const;

  friend auto operator<=>(const WKey&, const WKey&) = default;
  friend bool operator==(const WKey&, const WKey&) = default;
};

/// Builds the canonical key; throws std::invalid_argument on empty or
/// nonpositive weights or negative genus.
WKey canonicalize(std::vector<int> weights, int genus, int lambda);

struct RecursionTerm {
  Rational coefficient;
  WKey child;

  friend bool operator==(const RecursionTerm&, const RecursionTerm&) = default;
};

/// One step of the recursion with coefficients already divided by
/// N(2g+n-1). Children with equal keys are merged, and zero-coefficient or
/// zero-convention children are dropped. Sorted by child key.
/// Throws UndefinedExponent when key.exponent() <= 0.
std::vector<RecursionTerm> recursion_terms(const WKey& key);

/// Insert-once map from keys to values. Not synchronized: one MemoCache (and
/// any engine using it) belongs to one thread at a time.
class MemoCache {
 public:
  std::optional<Rational> find(const WKey& key) const;
  /// Binds key to value. Rebinding to an equal value is a no-op; rebinding to
  /// a different value throws std::logic_error.
  void insert(const WKey& key, const Rational& value);
  std::size_t size() const { return entries_.size(); }
  const std::map<WKey, Rational>& entries() const { return entries_; }

 private:
  std::map<WKey, Rational> entries_;
};

/// Evaluates W-numbers against a cache it does not own.
Rational w_value(const WKey& key, MemoCache& cache);

/// Owns a cache and optionally reports every recursion expansion it performs.
class WEngine {
 public:
  using ExpansionObserver = std::function<void(const WKey&, std::span<const RecursionTerm>)>;

  WEngine() = default;
  explicit WEngine(MemoCache cache) : cache_(std::move(cache)) {}

  Rational value(const WKey& key);
  Rational value(std::vector<int> weights, int genus, int lambda) {
    return value(canonicalize(std::move(weights), genus, lambda));
  }

  void set_expansion_observer(ExpansionObserver observer) { observer_ = std::move(observer); }

  MemoCache& cache() { return cache_; }
  const MemoCache& cache() const { return cache_; }

 private:
  friend Rational w_value(const WKey& key, MemoCache& cache);
  static Rational evaluate(const WKey& key, MemoCache& cache, const ExpansionObserver* observer);

  MemoCache cache_;
  ExpansionObserver observer_;
};

}  // namespace hodge
