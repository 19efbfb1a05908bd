#include <benchmark/benchmark.h>

#include <memory>

#include "chevpres/presentation.hpp"
#include "chevpres/verify.hpp"

using namespace chevpres;

static void BM_present_sp4(benchmark::State& state) {
  FiniteField F(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Presentation pres = present_sp4_sylow(F);
    benchmark::DoNotOptimize(pres.r_count());
  }
}
BENCHMARK(BM_present_sp4)->Arg(1)->Arg(2)->Arg(3);

static void BM_present_affine_d4(benchmark::State& state) {
  DynkinDiagram diag = build_affine_diagram(BaseType::D, 4);
  FiniteField F(2, 4);
  for (auto _ : state) {
    Presentation pres = present_affine_uplus(diag, F);
    benchmark::DoNotOptimize(pres.r_count());
  }
  state.SetLabel("226 relators");
}
BENCHMARK(BM_present_affine_d4);

static void BM_verify_affine_a3(benchmark::State& state) {
  DynkinDiagram diag = build_affine_diagram(BaseType::A, 3);
  FiniteField F(2, 4);
  Presentation pres = present_affine_uplus(diag, F);
  for (auto _ : state) {
    VerifyReport rep = verify_affine_presentation(diag, pres);
    benchmark::DoNotOptimize(rep.checked);
  }
  state.SetLabel("152 relators in rank-2 models");
}
BENCHMARK(BM_verify_affine_a3);
