// Polynomial-side hot paths: basis reduction, elimination-based ideal
// arithmetic, and radical membership.
#include <benchmark/benchmark.h>

#include <widecat/ideal.hpp>
#include <widecat/textio.hpp>

using namespace widecat;

static void BM_GroebnerCircleLine(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y] grevlex");
  std::vector<Poly> gens = parse_poly_list("x^2 + y^2 - 1, x - y", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ring, gens));
  }
}
BENCHMARK(BM_GroebnerCircleLine);

static void BM_GroebnerBinomialSurface(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y,z] grevlex");
  std::vector<Poly> gens = parse_poly_list("x*y - z^2, x^2 - y*z", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ring, gens));
  }
}
BENCHMARK(BM_GroebnerBinomialSurface);

static void BM_GroebnerLexElimination(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y,z] lex");
  std::vector<Poly> gens =
      parse_poly_list("x^2 + y + z - 1, x + y^2 + z - 1, x + y + z^2 - 1",
                      ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ring, gens));
  }
}
BENCHMARK(BM_GroebnerLexElimination);

static void BM_IdealIntersection(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y] grevlex");
  IdealGB a = groebner_basis(ring, parse_poly_list("x + y", ring));
  IdealGB b = groebner_basis(ring, parse_poly_list("x - y", ring));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal_intersection(a, b));
  }
}
BENCHMARK(BM_IdealIntersection);

static void BM_IdealQuotient(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y] grevlex");
  IdealGB a = groebner_basis(ring, parse_poly_list("x^2*y, x*y^2", ring));
  Poly f = parse_poly("x*y", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal_quotient(a, f));
  }
}
BENCHMARK(BM_IdealQuotient);

static void BM_RadicalMembership(benchmark::State& state) {
  RingDescriptor ring = parse_ring("QQ[x,y] grevlex");
  IdealGB a = groebner_basis(ring, parse_poly_list("x^2, y^5", ring));
  Poly f = parse_poly("x*y", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radical_member(f, a));
  }
}
BENCHMARK(BM_RadicalMembership);

BENCHMARK_MAIN();
