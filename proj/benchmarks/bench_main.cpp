#include <benchmark/benchmark.h>

#include <random>

#include "finitary/completion.hpp"
#include "finitary/hf.hpp"
#include "finitary/modal.hpp"
#include "finitary/parse.hpp"
#include "finitary/rational.hpp"

using namespace finitary;

namespace {

HfSet random_hf(std::mt19937_64& rng, uint32_t max_depth, uint32_t max_width) {
  if (max_depth == 0) return empty();
  uint32_t n = static_cast<uint32_t>(rng() % (max_width + 1));
  std::vector<HfSet> ms;
  for (uint32_t i = 0; i < n; ++i) ms.push_back(random_hf(rng, max_depth - 1, max_width));
  return make(std::move(ms));
}

void BM_make(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(random_hf(rng, 5, 3));
}
BENCHMARK(BM_make);

void BM_level(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<std::pair<HfSet, HfSet>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(random_hf(rng, 5, 3), random_hf(rng, 5, 3));
  size_t i = 0;
  for (auto _ : state) {
    auto& [s, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(level(s, t));
  }
}
BENCHMARK(BM_level);

void BM_hausdorff(benchmark::State& state) {
  std::mt19937_64 rng(2);  // same pairs as BM_level
  std::vector<std::pair<HfSet, HfSet>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(random_hf(rng, 5, 3), random_hf(rng, 5, 3));
  size_t i = 0;
  for (auto _ : state) {
    auto& [s, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(dist_hausdorff(s, t));
  }
}
BENCHMARK(BM_hausdorff);

void BM_minimize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<PointedGraph> graphs;
  for (int i = 0; i < 32; ++i) {
    PointedGraph g;
    uint32_t n = static_cast<uint32_t>(state.range(0));
    g.children.resize(n);
    for (uint32_t v = 0; v < n; ++v)
      for (uint32_t d = static_cast<uint32_t>(rng() % 4); d > 0; --d)
        g.children[v].push_back(static_cast<uint32_t>(rng() % n));
    graphs.push_back(std::move(g));
  }
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_minimize)->Arg(8)->Arg(32)->Arg(128);

void BM_enum_level3(benchmark::State& state) {
  for (auto _ : state) {
    // rebuilding is what costs; the cache hit path is the common case
    benchmark::DoNotOptimize(enum_level(3));
  }
}
BENCHMARK(BM_enum_level3);

void BM_normal_form(benchmark::State& state) {
  Formula f = parse_formula("[](<>true -> [](<>true)) & <>[]false");
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f));
}
BENCHMARK(BM_normal_form);

void BM_solve(benchmark::State& state) {
  EqSystem sys = parse_system("a={b,{}};b={c};c={a}|{{}};");
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_solve);

}  // namespace

BENCHMARK_MAIN();
