#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "hodge/w_engine.hpp"

using hodge::EtaMultiset;
using hodge::Rational;
using hodge::RecursionTerm;
using hodge::WEngine;
using hodge::WKey;
using hodge::canonicalize;

namespace {

// Straight transcription of the recursion on unsorted weight vectors,
// without memoization or term merging.
Rational naive_w(std::vector<int> a, int g, int i) {
  if (g < 0 || i < 0 || i > g) return Rational(0);
  const int n = static_cast<int>(a.size());
  if (g == 1 && i == 1 && n == 1) return Rational(static_cast<long long>(a[0]) * a[0] - 1, 24);
  if (g == 0 && i == 0 && n == 2) return Rational(1);
  const int e = 2 * g + n - 2 - i;
  if (e <= 0) throw std::domain_error("undefined");

  long long total = 0;
  for (int x : a) total += x;
  Rational sum;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      std::vector<int> b;
      for (int m = 0; m < n; ++m) {
        if (m != k && m != l) b.push_back(a[m]);
      }
      b.push_back(a[k] + a[l]);
      sum += Rational(a[k] + a[l]) * naive_w(b, g, i);
    }
  }
  for (int k = 0; k < n; ++k) {
    const long long x = a[k];
    if (x > 1 && i >= 1) sum += Rational(x * x * x - x, 12) * naive_w(a, g - 1, i - 1);
    for (int part = 1; part < a[k]; ++part) {
      std::vector<int> b = a;
      b[k] = part;
      b.push_back(a[k] - part);
      sum += Rational(static_cast<long long>(part) * (a[k] - part), 2) * naive_w(b, g - 1, i);
    }
  }
  return sum / Rational(total * (2 * g + n - 1));
}

void partitions(int total, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (total == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, f);
    cur.pop_back();
  }
}

void for_each_key(int max_total, int max_genus, const std::function<void(const WKey&)>& f) {
  std::vector<int> cur;
  for (int total = 1; total <= max_total; ++total) {
    partitions(total, total, cur, [&](const std::vector<int>& weights) {
      for (int g = 0; g <= max_genus; ++g) {
        for (int i = 0; i <= g; ++i) {
          const WKey key = canonicalize(weights, g, i);
          if (key.exponent() > 0 || key.is_initial_value()) f(key);
        }
      }
    });
  }
}

}  // namespace

TEST(EtaMultiset, SortedAndValidated) {
  EXPECT_EQ(EtaMultiset({3, 1, 2}).str(), "1,2,3");
  EXPECT_EQ(EtaMultiset::parse("2,1,1"), EtaMultiset({1, 1, 2}));
  EXPECT_THROW(EtaMultiset({}), std::invalid_argument);
  EXPECT_THROW(EtaMultiset({1, 0}), std::invalid_argument);
  EXPECT_THROW(EtaMultiset::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(EtaMultiset::parse("x"), std::invalid_argument);
  EXPECT_EQ(EtaMultiset::ones(3).total(), 3);
}

TEST(EtaMultiset, JoinSplitAppend) {
  const EtaMultiset m({1, 2, 4});
  EXPECT_EQ(m.joined(0, 2), EtaMultiset({2, 5}));
  EXPECT_EQ(m.split(2, 1), EtaMultiset({1, 1, 2, 3}));
  EXPECT_EQ(m.with_appended(1, 2), EtaMultiset({1, 1, 1, 2, 4}));
}

TEST(WKey, ExponentAndInitialValues) {
  EXPECT_EQ(canonicalize({1, 1, 1}, 2, 1).exponent(), 4);
  EXPECT_TRUE(canonicalize({5}, 1, 1).is_initial_value());
  EXPECT_TRUE(canonicalize({2, 3}, 0, 0).is_initial_value());
  EXPECT_FALSE(canonicalize({1, 2}, 1, 1).is_initial_value());
  EXPECT_THROW(canonicalize({}, 0, 0), std::invalid_argument);
  EXPECT_THROW(canonicalize({1, -1}, 0, 0), std::invalid_argument);
  EXPECT_THROW(canonicalize({1}, -1, 0), std::invalid_argument);
}

TEST(WEngine, InitialValues) {
  WEngine engine;
  EXPECT_EQ(engine.value({1}, 1, 1), Rational(0));
  EXPECT_EQ(engine.value({3}, 1, 1), Rational(1, 3));
  EXPECT_EQ(engine.value({2, 7}, 0, 0), Rational(1));
}

TEST(WEngine, ZeroConvention) {
  WEngine engine;
  EXPECT_EQ(engine.value({1, 1}, 1, 2), Rational(0));
  EXPECT_EQ(engine.value({1, 1}, 1, -1), Rational(0));
}

TEST(WEngine, WorkedValues) {
  WEngine engine;
  EXPECT_EQ(engine.value({1, 1, 1}, 2, 1), Rational(1, 120));
  EXPECT_EQ(engine.value({1, 1}, 2, 1), Rational(1, 480));
  EXPECT_EQ(engine.value({1, 2}, 1, 1), Rational(1, 6));
  EXPECT_EQ(engine.value({1, 1, 1}, 2, 2), Rational(1, 180));
  EXPECT_EQ(engine.value({1, 1}, 2, 2), Rational(1, 640));
}

TEST(WEngine, UndefinedExponent) {
  WEngine engine;
  EXPECT_THROW(engine.value({3}, 0, 0), hodge::UndefinedExponent);
  EXPECT_THROW(hodge::recursion_terms(canonicalize({1}, 0, 0)), hodge::UndefinedExponent);
  EXPECT_NO_THROW(hodge::recursion_terms(canonicalize({1, 1}, 1, 1)));
}

TEST(RecursionTerms, Examples) {
  EXPECT_EQ(hodge::recursion_terms(canonicalize({1, 2}, 1, 1)),
            (std::vector<RecursionTerm>{{Rational(1, 18), canonicalize({1, 2}, 0, 0)},
                                        {Rational(1, 3), canonicalize({3}, 1, 1)}}));
  EXPECT_EQ(hodge::recursion_terms(canonicalize({2}, 1, 0)),
            (std::vector<RecursionTerm>{{Rational(1, 8), canonicalize({1, 1}, 0, 0)}}));
  EXPECT_EQ(hodge::recursion_terms(canonicalize({1, 1}, 2, 1)),
            (std::vector<RecursionTerm>{{Rational(1, 5), canonicalize({2}, 2, 1)}}));
}

TEST(RecursionTerms, SortedMergedNonzero) {
  for_each_key(7, 3, [](const WKey& key) {
    if (key.is_initial_value()) return;
    const auto terms = hodge::recursion_terms(key);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      EXPECT_FALSE(terms[t].coefficient.is_zero());
      EXPECT_TRUE(terms[t].child.in_range());
      if (t > 0) EXPECT_LT(terms[t - 1].child, terms[t].child);
    }
  });
}

TEST(WEngine, MatchesNaiveRecursion) {
  WEngine engine;
  for_each_key(5, 2, [&](const WKey& key) {
    const auto w = key.etas.weights();
    EXPECT_EQ(engine.value(key), naive_w({w.begin(), w.end()}, key.genus, key.lambda)) << key.str();
  });
}

TEST(WEngine, PermutationSymmetry) {
  std::mt19937 rng(5);
  WEngine engine;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> w = {1, 1, 2, 3};
    std::shuffle(w.begin(), w.end(), rng);
    EXPECT_EQ(engine.value(w, 2, 1), engine.value({1, 1, 2, 3}, 2, 1));
    EXPECT_EQ(naive_w(w, 1, 1), engine.value({3, 2, 1, 1}, 1, 1));
  }
}

TEST(WEngine, MemoizationIsDeterministic) {
  WEngine warm;
  for_each_key(6, 3, [&](const WKey& key) { warm.value(key); });
  for_each_key(6, 3, [&](const WKey& key) {
    WEngine cold;
    EXPECT_EQ(cold.value(key), warm.value(key)) << key.str();
  });
}

TEST(WEngine, WeightConservedInEveryExpansion) {
  WEngine engine;
  std::size_t expansions = 0;
  engine.set_expansion_observer([&](const WKey& key, std::span<const RecursionTerm> terms) {
    ++expansions;
    for (const auto& term : terms) EXPECT_EQ(term.child.etas.total(), key.etas.total()) << key.str();
  });
  for_each_key(8, 4, [&](const WKey& key) { engine.value(key); });
  EXPECT_GT(expansions, 0u);
}

TEST(WEngine, ReachableKeysEvaluate) {
  WEngine engine;
  std::size_t count = 0;
  for_each_key(8, 4, [&](const WKey& key) {
    EXPECT_NO_THROW(engine.value(key)) << key.str();
    ++count;
  });
  EXPECT_GT(count, 100u);
}

TEST(MemoCache, InsertOnce) {
  hodge::MemoCache cache;
  const WKey key = canonicalize({1, 1}, 1, 0);
  cache.insert(key, Rational(1, 2));
  EXPECT_NO_THROW(cache.insert(key, Rational(2, 4)));
  EXPECT_THROW(cache.insert(key, Rational(1, 3)), std::logic_error);
  EXPECT_EQ(cache.find(key), Rational(1, 2));
  EXPECT_FALSE(cache.find(canonicalize({1}, 1, 0)).has_value());
}

TEST(WEngine, SharedCacheFunction) {
  hodge::MemoCache cache;
  EXPECT_EQ(hodge::w_value(canonicalize({1, 1, 1}, 2, 1), cache), Rational(1, 120));
  EXPECT_GT(cache.size(), 1u);
}
