#include <benchmark/benchmark.h>

#include "ppdet/families.hpp"
#include "ppdet/interp.hpp"
#include "ppdet/lattice.hpp"
#include "ppdet/linalg.hpp"

using namespace ppdet;

namespace {

void BM_DetDMatrix(benchmark::State& state) {
  const long n = state.range(0);
  const Matrix m = d_matrix(3, 5, n);
  for (auto _ : state) {
    Rational d = det(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetDMatrix)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_DetEMatrix(benchmark::State& state) {
  const long n = state.range(0);
  const Matrix m = e_matrix(4, 3, n);
  for (auto _ : state) {
    Rational d = det(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetEMatrix)->Arg(4)->Arg(6)->Arg(8);

void BM_Pfaffian(benchmark::State& state) {
  const long n = state.range(0);
  const SkewMatrix q = q_matrix_even(2, n);
  for (auto _ : state) {
    Rational pf = pfaffian(q);
    benchmark::DoNotOptimize(pf);
  }
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(8)->Arg(12);

void BM_MinorSum(benchmark::State& state) {
  const long n = state.range(0);
  const Matrix m = matrix_21(2, n);
  for (auto _ : state) {
    Rational s = minor_sum(m, n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_MinorSum)->Arg(3)->Arg(4)->Arg(5);

void BM_CtSeries(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    Rational ct = ct_via_series(1, n);
    benchmark::DoNotOptimize(ct);
  }
}
BENCHMARK(BM_CtSeries)->Arg(2)->Arg(3);

void BM_RhsThm8(benchmark::State& state) {
  for (auto _ : state) {
    Rational v = rhs_thm8(4, 4, 6);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_RhsThm8);

void BM_P1Step6(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    ResidualReport rep = p1_via_step6(m, 6);
    benchmark::DoNotOptimize(rep.polynomial);
  }
}
BENCHMARK(BM_P1Step6)->Arg(2)->Arg(4);

void BM_SppEnumeration(benchmark::State& state) {
  const long x = state.range(0);
  for (auto _ : state) {
    Integer c = enumerate_spp(x, 4);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SppEnumeration)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
