#pragma once

/// @file verify.hpp
/// @brief Exact cross-checks between the W-engine, the tree sums and the
/// generating-function oracle.
///
/// Every check compares reduced rationals for equality and walks its
/// parameter range in lexicographic order, so a failure always reports the
/// first counterexample.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hodge/w_engine.hpp"

namespace hodge {

struct Counterexample {
  std::string parameters;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  std::string range;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<Counterexample> counterexample;

  std::string to_text() const;
  /// {"check", "range", "status", "instances", "counterexample"?}
  std::string to_json() const;
};

/// S_{g,n} == W^g_g(eta_1^n) for 0 <= g <= g_max, 1 <= n <= n_max.
CheckReport check_tree_identity(int g_max, int n_max, WEngine& engine);

/// sum_j (-1)^j C(g,j) S_{g,n+g-j} == bernoulli_rhs(g) for 1 <= g <= g_max, 1 <= n <= n_max.
CheckReport check_bernoulli_identity(int g_max, int n_max);

/// S_{0,n} == 1 for 1 <= n <= n_max.
CheckReport check_genus0(int n_max);

/// hodge_integral(g,i) == oracle_integral(g,i) for 0 <= i <= g <= g_max.
CheckReport check_oracle_agreement(int g_max, WEngine& engine);

/// hodge_integral(g,i,aux) is the same rational for every aux in aux_set.
CheckReport check_choice_independence(int g_max, const std::vector<EtaMultiset>& aux_set,
                                      WEngine& engine);

/// The auxiliary weight vectors {[1],[2],[3],[1,1],[2,3]}.
std::vector<EtaMultiset> default_aux_set();

using Deadline = std::chrono::steady_clock::time_point;

/// For every (g,n) with 1 <= 2g+n-1 <= max_steps: walks all histories,
/// checks that each tree passes validate_tree, that its encoding parses back
/// to a tree with the same history (so distinct histories give distinct
/// encodings), and, where the instance is small enough to hold in memory,
/// that the number of distinct encodings equals the number of histories.
/// Instances run in order of increasing tree count. When `deadline` passes
/// the check stops and fails, reporting how far it got.
CheckReport check_history_bijectivity(int max_steps, std::optional<Deadline> deadline = std::nullopt);

}  // namespace hodge
