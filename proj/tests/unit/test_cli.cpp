#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hodgecalc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Integral) {
  EXPECT_EQ(run({"integral", "--g", "1", "--lambda", "1"}).out, "1/24\n");
  EXPECT_EQ(run({"integral", "--g", "2", "--lambda", "2"}).out, "7/5760\n");
  EXPECT_EQ(run({"integral", "--g", "2", "--lambda", "1", "--weights", "2,3"}).out, "1/480\n");
  EXPECT_EQ(run({"integral", "--g", "1", "--lambda", "1", "--decimal", "5"}).out, "1/24\napprox 0.04167\n");
}

TEST(Cli, WNumber) {
  EXPECT_EQ(run({"w", "--g", "2", "--lambda", "1", "--weights", "1,1,1"}).out, "1/120\n");
  EXPECT_EQ(run({"w", "--g", "1", "--lambda", "1", "--weights", "2,1"}).out, "1/6\n");
}

TEST(Cli, Trees) {
  EXPECT_EQ(run({"trees", "sum", "--g", "2", "--n", "3"}).out, "1/180\n");
  const auto text = run({"trees", "enumerate", "--g", "1", "--n", "2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "count 1\nsum 1/24\nU2(B3(L1,L2))\t1/24\n");

  const auto j = nlohmann::json::parse(run({"trees", "enumerate", "--g", "2", "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(j.at("count"), 9);
  EXPECT_EQ(j.at("sum"), "1/180");
  ASSERT_EQ(j.at("trees").size(), 9u);
  for (std::size_t k = 1; k < 9; ++k) {
    EXPECT_LT(j["trees"][k - 1]["encoding"].get<std::string>(), j["trees"][k]["encoding"].get<std::string>());
  }
}

TEST(Cli, Table) {
  const auto r = run({"table", "--max-g", "2"});
  EXPECT_EQ(r.out, "g\ti\tpsi_power\tintegral\n1\t0\t1\t1/24\n1\t1\t0\t1/24\n2\t0\t4\t1/1152\n2\t1\t3\t1/480\n2\t2\t2\t7/5760\n");
  const auto j = nlohmann::json::parse(run({"table", "--max-g", "1", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 2u);
}

TEST(Cli, Bernoulli) { EXPECT_EQ(run({"bernoulli", "--m", "4"}).out, "-1/30\n"); }

TEST(Cli, Verify) {
  const auto r = run({"verify", "--check", "genus0", "--max-n", "5"});
  EXPECT_EQ(r.code, hodge::cli::kExitOk);
  EXPECT_EQ(r.out, "PASS genus0 [1<=n<=5] instances=5\n");
  const auto j = nlohmann::json::parse(run({"verify", "--check", "oracle", "--max-g", "2", "--format", "json"}).out);
  EXPECT_EQ(j.at("status"), "pass");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"integral", "--g", "1"}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"integral", "--g", "0", "--lambda", "0"}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"w", "--g", "0", "--lambda", "0", "--weights", "3"}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"w", "--g", "1", "--lambda", "0", "--weights", "1,x"}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "nope"}).code, hodge::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, hodge::cli::kExitUsage);
  EXPECT_FALSE(run({"integral", "--g", "1"}).err.empty());
}

TEST(Cli, Deterministic) {
  const auto a = run({"trees", "enumerate", "--g", "1", "--n", "4"});
  const auto b = run({"trees", "enumerate", "--g", "1", "--n", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CacheRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "hodge_cli_cache_test.tsv";
  std::filesystem::remove(path);
  EXPECT_EQ(run({"integral", "--g", "3", "--lambda", "2", "--cache", path.string()}).code, 0);
  ASSERT_TRUE(std::filesystem::exists(path));
  std::ifstream in(path);
  const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  EXPECT_EQ(run({"integral", "--g", "3", "--lambda", "2", "--cache", path.string()}).out,
            run({"integral", "--g", "3", "--lambda", "2"}).out);
  std::ifstream again(path);
  const std::string second((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
  EXPECT_EQ(first, second);

  std::ofstream corrupt(path, std::ios::app);
  corrupt << "1\t1\t3\t1/2\n";
  corrupt.close();
  const auto bad = run({"integral", "--g", "1", "--lambda", "1", "--cache", path.string()});
  EXPECT_NE(bad.code, 0);
  EXPECT_FALSE(bad.err.empty());
  std::filesystem::remove(path);
}
