#include "hodgecalc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodge/bernoulli.hpp"
#include "hodge/cache_io.hpp"
#include "hodge/hodge_driver.hpp"
#include "hodge/trees.hpp"
#include "hodge/verify.hpp"
#include "hodge/w_engine.hpp"

namespace hodge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int genus = -1;
  int lambda = -1;
  int n = -1;
  int max_g = -1;
  int max_n = -1;
  int m = -1;
  std::optional<int> decimal;
  std::string weights;
  std::string format;
  std::string check = "all";
  std::string cache;
};

void print_value(std::ostream& out, const Rational& value, std::optional<int> decimal) {
  out << value.str() << '\n';
  if (decimal) out << "approx " << value.to_decimal(*decimal) << '\n';
}

void require(bool cond, const std::string& message) {
  if (!cond) throw UsageError(message);
}

EtaMultiset parse_weights(const std::string& text) {
  try {
    return EtaMultiset::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

WEngine open_engine(const Options& o) {
  WEngine engine;
  if (!o.cache.empty() && std::filesystem::exists(o.cache)) {
    try {
      load_cache(o.cache, engine.cache(), CacheCheck::recompute);
    } catch (const CacheFormatError& e) {
      throw UsageError(std::string("rejected cache file: ") + e.what());
    }
  }
  return engine;
}

void close_engine(const Options& o, const WEngine& engine) {
  if (!o.cache.empty()) save_cache(o.cache, engine.cache());
}

int cmd_integral(const Options& o, std::ostream& out) {
  require(o.genus >= 1, "--g must be at least 1");
  require(o.lambda >= 0 && o.lambda <= o.genus, "--lambda must satisfy 0 <= lambda <= g");
  const EtaMultiset aux = o.weights.empty() ? EtaMultiset::ones(1) : parse_weights(o.weights);
  WEngine engine = open_engine(o);
  const Rational value = hodge_integral(make_query(o.genus, o.lambda, aux), engine);
  close_engine(o, engine);
  print_value(out, value, o.decimal);
  return kExitOk;
}

int cmd_w(const Options& o, std::ostream& out) {
  require(o.genus >= 0, "--g must be nonnegative");
  const EtaMultiset etas = parse_weights(o.weights);
  const WKey key{o.genus, o.lambda, etas};
  WEngine engine = open_engine(o);
  Rational value;
  try {
    value = engine.value(key);
  } catch (const UndefinedExponent& e) {
    throw UsageError(e.what());
  }
  close_engine(o, engine);
  print_value(out, value, o.decimal);
  return kExitOk;
}

int cmd_trees_enumerate(const Options& o, std::ostream& out) {
  require(o.genus >= 0, "--g must be nonnegative");
  require(o.n >= 1, "--n must be at least 1");
  const std::string format = o.format.empty() ? "text" : o.format;

  std::vector<std::pair<std::string, Rational>> rows;
  Rational sum;
  for (const auto& tree : enumerate_trees(o.genus, o.n)) {
    Rational w = tree_weight(tree);
    sum += w;
    rows.emplace_back(canonical_encoding(tree), std::move(w));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  if (format == "json") {
    nlohmann::ordered_json j;
    j["g"] = o.genus;
    j["n"] = o.n;
    j["count"] = rows.size();
    j["sum"] = sum.str();
    j["trees"] = nlohmann::ordered_json::array();
    for (const auto& [enc, w] : rows) j["trees"].push_back({{"encoding", enc}, {"weight", w.str()}});
    out << j.dump(2) << '\n';
  } else {
    out << "count " << rows.size() << '\n' << "sum " << sum.str() << '\n';
    for (const auto& [enc, w] : rows) out << enc << '\t' << w.str() << '\n';
  }
  return kExitOk;
}

int cmd_trees_sum(const Options& o, std::ostream& out) {
  require(o.genus >= 0, "--g must be nonnegative");
  require(o.n >= 1, "--n must be at least 1");
  print_value(out, tree_sum(o.genus, o.n), o.decimal);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  require(o.max_g >= 1, "--max-g must be at least 1");
  const std::string format = o.format.empty() ? "tsv" : o.format;
  WEngine engine;
  const auto rows = hodge_table(o.max_g, engine);
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"g", r.genus}, {"i", r.lambda}, {"psi_power", r.psi_power}, {"integral", r.value.str()}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << "g\ti\tpsi_power\tintegral\n";
    for (const auto& r : rows) {
      out << r.genus << '\t' << r.lambda << '\t' << r.psi_power << '\t' << r.value.str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_bernoulli(const Options& o, std::ostream& out) {
  require(o.m >= 0, "--m must be nonnegative");
  print_value(out, bernoulli(static_cast<unsigned>(o.m)), o.decimal);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  auto pick = [](int given, int fallback) { return given >= 0 ? given : fallback; };
  require(o.max_g < 0 || o.max_g >= 1, "--max-g must be at least 1");
  require(o.max_n < 0 || o.max_n >= 1, "--max-n must be at least 1");

  WEngine engine;
  std::vector<CheckReport> reports;
  const bool all = o.check == "all";
  if (all || o.check == "tree-identity") reports.push_back(check_tree_identity(pick(o.max_g, 3), pick(o.max_n, 5), engine));
  if (all || o.check == "bernoulli") reports.push_back(check_bernoulli_identity(pick(o.max_g, 3), pick(o.max_n, 3)));
  if (all || o.check == "genus0") reports.push_back(check_genus0(pick(o.max_n, 9)));
  if (all || o.check == "oracle") reports.push_back(check_oracle_agreement(pick(o.max_g, 6), engine));
  if (all || o.check == "independence") {
    reports.push_back(check_choice_independence(pick(o.max_g, 3), default_aux_set(), engine));
  }

  if (format == "json") {
    if (reports.size() == 1) {
      out << nlohmann::ordered_json::parse(reports.front().to_json()).dump(2) << '\n';
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : reports) j.push_back(nlohmann::ordered_json::parse(r.to_json()));
      out << j.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) out << r.to_text() << '\n';
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge integrals, W-numbers and decorated-tree sums", "hodgecalc"};
  app.require_subcommand(1);
  Options o;

  auto* integral = app.add_subcommand("integral", "int over M_{g,1} of psi_1^{3g-2-i} lambda_i");
  integral->add_option("--g", o.genus, "genus")->required();
  integral->add_option("--lambda", o.lambda, "lambda index i")->required();
  integral->add_option("--weights", o.weights, "auxiliary weights a1,a2,... (default 1)");
  integral->add_option("--cache", o.cache, "memo cache file to load and save");
  integral->add_option("--decimal", o.decimal, "also print an approximation with D digits");

  auto* w = app.add_subcommand("w", "W-number W^i_g(eta_a1 ... eta_an)");
  w->add_option("--g", o.genus, "genus")->required();
  w->add_option("--lambda", o.lambda, "lambda index i")->required();
  w->add_option("--weights", o.weights, "weights a1,a2,...")->required();
  w->add_option("--cache", o.cache, "memo cache file to load and save");
  w->add_option("--decimal", o.decimal, "also print an approximation with D digits");

  auto* trees = app.add_subcommand("trees", "decorated trees");
  trees->require_subcommand(1);
  auto* enumerate = trees->add_subcommand("enumerate", "list (n,g)-decorated trees with weights");
  enumerate->add_option("--g", o.genus, "genus")->required();
  enumerate->add_option("--n", o.n, "number of leaves")->required();
  enumerate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* sum = trees->add_subcommand("sum", "S_{g,n}");
  sum->add_option("--g", o.genus, "genus")->required();
  sum->add_option("--n", o.n, "number of leaves")->required();
  sum->add_option("--decimal", o.decimal, "also print an approximation with D digits");

  auto* table = app.add_subcommand("table", "all integrals with g <= G");
  table->add_option("--max-g", o.max_g, "largest genus")->required();
  table->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_m (B_1 = -1/2)");
  bern->add_option("--m", o.m, "index")->required();
  bern->add_option("--decimal", o.decimal, "also print an approximation with D digits");

  auto* verify = app.add_subcommand("verify", "exact identity checks");
  verify->add_option("--check", o.check, "which check")
      ->check(CLI::IsMember({"tree-identity", "bernoulli", "genus0", "oracle", "independence", "all"}));
  verify->add_option("--max-g", o.max_g, "largest genus");
  verify->add_option("--max-n", o.max_n, "largest n");
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store{"hodgecalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hodgecalc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (o.decimal && *o.decimal < 0) throw UsageError("--decimal must be nonnegative");
    if (integral->parsed()) return cmd_integral(o, out);
    if (w->parsed()) return cmd_w(o, out);
    if (enumerate->parsed()) return cmd_trees_enumerate(o, out);
    if (sum->parsed()) return cmd_trees_sum(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (bern->parsed()) return cmd_bernoulli(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "hodgecalc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "hodgecalc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hodgecalc: error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "hodgecalc: no command given\n";
  return kExitUsage;
}

}  // namespace hodge::cli
