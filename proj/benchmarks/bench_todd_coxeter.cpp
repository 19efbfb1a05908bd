#include <benchmark/benchmark.h>

#include "chevpres/presentation.hpp"
#include "chevpres/todd_coxeter.hpp"

using namespace chevpres;

static void BM_tc_sl3(benchmark::State& state) {
  Presentation pres = present_sl3_sylow(
      FiniteField(static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1))));
  for (auto _ : state) {
    CosetTable ct = todd_coxeter(pres, 1 << 20);
    benchmark::DoNotOptimize(ct.cosets);
  }
}
BENCHMARK(BM_tc_sl3)->Args({2, 2})->Args({3, 2});

static void BM_tc_sp4_odd(benchmark::State& state) {
  Presentation pres = present_sp4_sylow(FiniteField(3, 1));
  for (auto _ : state) {
    CosetTable ct = todd_coxeter(pres, 1 << 20);
    benchmark::DoNotOptimize(ct.cosets);
  }
  state.SetLabel("81 cosets");
}
BENCHMARK(BM_tc_sp4_odd);

static void BM_tc_sp4_even_q4(benchmark::State& state) {
  Presentation pres = present_sp4_sylow_even(FiniteField(2, 2));
  for (auto _ : state) {
    CosetTable ct = todd_coxeter(pres, 1 << 20);
    benchmark::DoNotOptimize(ct.cosets);
  }
  state.SetLabel("256 cosets");
}
BENCHMARK(BM_tc_sp4_even_q4);
