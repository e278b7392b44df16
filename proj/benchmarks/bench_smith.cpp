// Integer-matrix hot paths: Smith normal form and kernel bases across
// growing matrix sizes.
#include <benchmark/benchmark.h>

#include <random>

#include <widecat/int_matrix.hpp>

using namespace widecat;

namespace {

IntMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.at(i, j) = Int(entry(rng));
    }
  }
  return m;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix a = random_matrix(n, n, 0x51u + static_cast<unsigned>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(a));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Complexity();

static void BM_KernelBasis(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  // Wide matrices guarantee a nontrivial kernel.
  IntMatrix a = random_matrix(n, 2 * n, 0xBA5Eu + static_cast<unsigned>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_basis_z(a));
  }
}
BENCHMARK(BM_KernelBasis)->Arg(4)->Arg(8)->Arg(16);

static void BM_Determinant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix a = random_matrix(n, n, 0xDE7u + static_cast<unsigned>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(a));
  }
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
