#include <benchmark/benchmark.h>

#include "chevpres/ffield.hpp"

using namespace chevpres;

static void BM_field_construction(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  int a = static_cast<int>(state.range(1));
  for (auto _ : state) {
    FiniteField F(p, a);
    benchmark::DoNotOptimize(F.q());
  }
}
BENCHMARK(BM_field_construction)->Args({3, 2})->Args({2, 4})->Args({5, 2});

static void BM_field_mul(benchmark::State& state) {
  FiniteField F(static_cast<int>(state.range(0)),
                static_cast<int>(state.range(1)));
  FFElement x = F.basis(F.a());
  FFElement y = F.add(F.basis(1), F.basis(F.a()));
  for (auto _ : state) {
    x = F.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_field_mul)->Args({3, 2})->Args({2, 4});

static void BM_coefficient_tables(benchmark::State& state) {
  FiniteField F(3, 3);
  for (auto _ : state) {
    CoefficientTables T = build_coefficient_tables(F);
    benchmark::DoNotOptimize(T.c(1, 1, 1));
  }
}
BENCHMARK(BM_coefficient_tables);
