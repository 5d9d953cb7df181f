#include "hodge/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "hodge/gf_oracle.hpp"
#include "hodge/hodge_driver.hpp"
#include "hodge/trees.hpp"

namespace hodge {

namespace {

// Instances with more trees than this are verified without a distinct-set.
constexpr std::uint64_t kDistinctSetLimit = 2'000'000;

std::string gn(int g, int n) { return "g=" + std::to_string(g) + " n=" + std::to_string(n); }

CheckReport make_report(std::string check, std::string range) {
  CheckReport r;
  r.check = std::move(check);
  r.range = std::move(range);
  return r;
}

void fail(CheckReport& report, std::string parameters, const Rational& lhs, const Rational& rhs) {
  report.passed = false;
  report.counterexample = Counterexample{std::move(parameters), lhs.str(), rhs.str()};
}

}  // namespace

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << (passed ? "PASS " : "FAIL ") << check << " [" << range << "] instances=" << instances;
  if (counterexample) {
    os << "; first counterexample " << counterexample->parameters << ": " << counterexample->lhs;
    if (!counterexample->rhs.empty()) os << " != " << counterexample->rhs;
  }
  return os.str();
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["range"] = range;
  j["status"] = passed ? "pass" : "fail";
  j["instances"] = instances;
  if (counterexample) {
    j["counterexample"] = {{"parameters", counterexample->parameters},
                           {"lhs", counterexample->lhs},
                           {"rhs", counterexample->rhs}};
  }
  return j.dump();
}

CheckReport check_tree_identity(int g_max, int n_max, WEngine& engine) {
  CheckReport report = make_report("tree-identity", "0<=g<=" + std::to_string(g_max) + ", 1<=n<=" + std::to_string(n_max));
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 1; n <= n_max; ++n) {
      ++report.instances;
      const Rational trees = tree_sum(g, n);
      const WKey key{g, g, EtaMultiset::ones(n)};
      // W_0(eta_1) lies outside the recursion; the single-leaf tree gives 1.
      const Rational w = (g == 0 && n == 1) ? Rational(1) : engine.value(key);
      if (trees != w) {
        fail(report, gn(g, n), trees, w);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_bernoulli_identity(int g_max, int n_max) {
  CheckReport report = make_report("bernoulli", "1<=g<=" + std::to_string(g_max) + ", 1<=n<=" + std::to_string(n_max));
  for (int g = 1; g <= g_max; ++g) {
    const Rational rhs = bernoulli_rhs(g);
    for (int n = 1; n <= n_max; ++n) {
      ++report.instances;
      Rational lhs;
      for (int j = 0; j <= g; ++j) {
        Rational term = binomial(static_cast<unsigned>(g), static_cast<unsigned>(j)) * tree_sum(g, n + g - j);
        lhs += (j % 2 == 0) ? term : -term;
      }
      if (lhs != rhs) {
        fail(report, gn(g, n), lhs, rhs);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_genus0(int n_max) {
  CheckReport report = make_report("genus0", "1<=n<=" + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    ++report.instances;
    const Rational s = tree_sum(0, n);
    if (s != Rational(1)) {
      fail(report, "n=" + std::to_string(n), s, Rational(1));
      return report;
    }
  }
  return report;
}

CheckReport check_oracle_agreement(int g_max, WEngine& engine) {
  CheckReport report = make_report("oracle", "0<=i<=g<=" + std::to_string(g_max));
  const BivariateGF gf = gf_expand(g_max);
  for (int g = 1; g <= g_max; ++g) {
    for (int i = 0; i <= g; ++i) {
      ++report.instances;
      const Rational mine = hodge_integral(make_query(g, i), engine);
      const Rational oracle = oracle_integral(g, i, gf);
      if (mine != oracle) {
        fail(report, "g=" + std::to_string(g) + " i=" + std::to_string(i), mine, oracle);
        return report;
      }
    }
  }
  return report;
}

std::vector<EtaMultiset> default_aux_set() {
  return {EtaMultiset({1}), EtaMultiset({2}), EtaMultiset({3}), EtaMultiset({1, 1}), EtaMultiset({2, 3})};
}

CheckReport check_choice_independence(int g_max, const std::vector<EtaMultiset>& aux_set, WEngine& engine) {
  std::string names;
  for (const auto& aux : aux_set) names += (names.empty() ? "[" : " [") + aux.str() + "]";
  CheckReport report = make_report("independence", "0<=i<=g<=" + std::to_string(g_max) + ", aux=" + names);
  if (aux_set.empty()) throw std::invalid_argument("aux set must be nonempty");
  for (int g = 1; g <= g_max; ++g) {
    for (int i = 0; i <= g; ++i) {
      const Rational reference = hodge_integral(make_query(g, i, aux_set.front()), engine);
      for (std::size_t a = 1; a < aux_set.size(); ++a) {
        ++report.instances;
        const Rational other = hodge_integral(make_query(g, i, aux_set[a]), engine);
        if (other != reference) {
          fail(report,
               "g=" + std::to_string(g) + " i=" + std::to_string(i) + " aux=[" + aux_set.front().str() +
                   "] vs [" + aux_set[a].str() + "]",
               reference, other);
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport check_history_bijectivity(int max_steps, std::optional<Deadline> deadline) {
  CheckReport report = make_report("history-bijectivity", "1<=2g+n-1<=" + std::to_string(max_steps));

  struct Instance {
    int g;
    int n;
    std::uint64_t histories;
  };
  std::vector<Instance> instances;
  for (int g = 0; 2 * g <= max_steps; ++g) {
    for (int n = 1; 2 * g + n - 1 <= max_steps; ++n) {
      if (2 * g + n - 1 < 1) continue;
      instances.push_back({g, n, count_trees(g, n)});
    }
  }
  std::sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) {
    return std::tie(a.histories, a.g, a.n) < std::tie(b.histories, b.g, b.n);
  });

  auto reject = [&report](const Instance& inst, std::string what) {
    report.passed = false;
    report.counterexample = Counterexample{gn(inst.g, inst.n), std::move(what), ""};
  };

  for (const Instance& inst : instances) {
    ++report.instances;
    const bool track_distinct = inst.histories <= kDistinctSetLimit;
    std::unordered_set<std::string> distinct;
    std::uint64_t visited = 0;
    std::string problem;
    bool timed_out = false;
    DecoratedTree decoded_tree = DecoratedTree::leaf(1);
    std::vector<HistoryStep> decoded;

    for_each_history(inst.g, inst.n,
                     [&](const DecoratedTree& tree, std::span<const HistoryStep> steps, std::string_view enc) {
                       ++visited;
                       if (deadline && (visited & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline) {
                         timed_out = true;
                         return false;
                       }
                       if (auto v = validate_tree(tree); !v) {
                         problem = "tree " + std::string(enc) + " fails " + v.violated_rule;
                         return false;
                       }
                       parse_encoding(enc, decoded_tree);
                       history_of(decoded_tree, decoded);
                       if (!std::equal(decoded.begin(), decoded.end(), steps.begin(), steps.end())) {
                         problem = "encoding " + std::string(enc) + " does not determine its history";
                         return false;
                       }
                       if (track_distinct && !distinct.emplace(enc).second) {
                         problem = "duplicate encoding " + std::string(enc);
                         return false;
                       }
                       return true;
                     });

    if (timed_out) {
      reject(inst, "deadline reached after verifying " + std::to_string(visited - 1) + " of " +
                       std::to_string(inst.histories) + " histories");
      return report;
    }
    if (!problem.empty()) {
      reject(inst, problem);
      return report;
    }
    if (visited != inst.histories || (track_distinct && distinct.size() != inst.histories)) {
      reject(inst, "history count " + std::to_string(visited) + " / distinct encodings " +
                       std::to_string(track_distinct ? distinct.size() : visited) + " vs expected " +
                       std::to_string(inst.histories));
      return report;
    }
  }
  return report;
}

}  // namespace hodge
