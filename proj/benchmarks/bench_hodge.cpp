#include <benchmark/benchmark.h>

#include "hodge/gf_oracle.hpp"
#include "hodge/hodge_driver.hpp"
#include "hodge/trees.hpp"
#include "hodge/w_engine.hpp"

static void BM_HodgeTableColdCache(benchmark::State& state) {
  const int g_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hodge::WEngine engine;
    benchmark::DoNotOptimize(hodge::hodge_table(g_max, engine));
  }
}
BENCHMARK(BM_HodgeTableColdCache)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_WValueLambdaG(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    hodge::MemoCache cache;
    benchmark::DoNotOptimize(hodge::w_value({g, g, hodge::EtaMultiset::ones(n)}, cache));
  }
}
BENCHMARK(BM_WValueLambdaG)->Args({3, 5})->Args({5, 6})->Unit(benchmark::kMicrosecond);

static void BM_TreeSum(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hodge::tree_sum(g, n));
  state.counters["trees"] = static_cast<double>(hodge::count_trees(g, n));
}
BENCHMARK(BM_TreeSum)->Args({0, 7})->Args({2, 5})->Args({3, 5})->Args({0, 9})->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrees(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hodge::enumerate_trees(g, n));
}
BENCHMARK(BM_EnumerateTrees)->Args({2, 4})->Args({1, 6})->Unit(benchmark::kMillisecond);

static void BM_GfExpand(benchmark::State& state) {
  const int g_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hodge::gf_expand(g_max));
}
BENCHMARK(BM_GfExpand)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
