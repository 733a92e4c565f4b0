#include <benchmark/benchmark.h>

#include "bicross/bicrossed.hpp"
#include "bicross/cyclic.hpp"
#include "bicross/factorization.hpp"
#include "bicross/iso.hpp"

namespace {

using namespace bicross;

void BM_ValidateGroupTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGroup g = make_cyclic(n);
  for (auto _ : state) {
    auto defect = check_group_table(g.table(), n);
    benchmark::DoNotOptimize(defect);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ValidateGroupTable)->Arg(16)->Arg(64)->Arg(128)->Complexity();

void BM_EnumerateMatchedPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto pairs = enumerate_matched_pairs(n, m);
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_EnumerateMatchedPairs)
    ->Args({3, 6})
    ->Args({5, 4})
    ->Args({5, 8})
    ->Args({7, 8});

void BM_SeedScanParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto seeds = enumerate_matched_seeds(7, 10, kDefaultSeedBudget, workers);
    benchmark::DoNotOptimize(seeds);
  }
}
BENCHMARK(BM_SeedScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildBicrossed(benchmark::State& state) {
  const auto pairs = enumerate_matched_pairs(5, 10);
  const MatchedPair& mp = pairs.back();
  for (auto _ : state) {
    auto bi = build_bicrossed(mp);
    benchmark::DoNotOptimize(bi);
  }
}
BENCHMARK(BM_BuildBicrossed);

void BM_AreIsomorphic(benchmark::State& state) {
  const auto semis = enumerate_semidirects(5, 4);
  const FiniteGroup& a = semis[1].group;
  const auto pairs = enumerate_matched_pairs(5, 4);
  const FiniteGroup b = build_bicrossed(pairs[1]).group;
  for (auto _ : state) {
    auto cert = are_isomorphic(a, b);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_AreIsomorphic);

void BM_WitnessDecomposition(benchmark::State& state) {
  const auto pairs = enumerate_matched_pairs(5, 10);
  const BicrossedGroup bi = build_bicrossed(pairs.back());
  for (auto _ : state) {
    auto w = witness_decomposition(bi.group, bi.encode(1, 0), bi.encode(0, 1), 5, 10);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessDecomposition);

void BM_FindExactFactorizations(benchmark::State& state) {
  const auto pairs = enumerate_matched_pairs(3, 6);
  const FiniteGroup e = build_bicrossed(pairs.back()).group;
  for (auto _ : state) {
    auto fs = find_exact_factorizations(e);
    benchmark::DoNotOptimize(fs);
  }
}
BENCHMARK(BM_FindExactFactorizations);

}  // namespace

BENCHMARK_MAIN();
