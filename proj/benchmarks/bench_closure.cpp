#include <benchmark/benchmark.h>

#include <memory>

#include "chevpres/enumerate.hpp"

using namespace chevpres;

static void BM_closure_a2(benchmark::State& state) {
  auto F = std::make_shared<FiniteField>(3, 2);
  MatrixModel m = build_model(ModelKind::A2, F);
  auto gens = m.generator_matrices();
  for (auto _ : state) {
    GroupEnumeration G = closure(*F, gens, 2000);
    benchmark::DoNotOptimize(G.order());
  }
  state.SetLabel("|G| = 729");
}
BENCHMARK(BM_closure_a2);

static void BM_closure_c2(benchmark::State& state) {
  auto F = std::make_shared<FiniteField>(3, 2);
  MatrixModel m = build_model(ModelKind::C2, F);
  auto gens = m.generator_matrices();
  for (auto _ : state) {
    GroupEnumeration G = closure(*F, gens, 2 * 6561);
    benchmark::DoNotOptimize(G.order());
  }
  state.SetLabel("|G| = 6561");
}
BENCHMARK(BM_closure_c2);

static void BM_frattini(benchmark::State& state) {
  auto F = std::make_shared<FiniteField>(3, 2);
  MatrixModel m = build_model(ModelKind::C2, F);
  GroupEnumeration G = closure(*F, m.generator_matrices(), 2 * 6561);
  for (auto _ : state)
    benchmark::DoNotOptimize(frattini_generator_count(*F, G, 3));
}
BENCHMARK(BM_frattini);
