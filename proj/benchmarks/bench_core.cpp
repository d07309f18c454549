#include <benchmark/benchmark.h>

#include "oddab/heuristics.hpp"
#include "oddab/montecarlo.hpp"
#include "oddab/pell.hpp"
#include "oddab/sampler.hpp"
#include "oddab/selmer.hpp"

namespace {

using namespace oddab;

void BM_EnumerateIsotropicZ7(benchmark::State& state) {
  OddAbelianGroup g({7});
  BilinearGSpace v = build_V(g);
  CharacterClass chi = character_classes(g)[1];
  for (auto _ : state) {
    ComponentSpace comp = restrict_component(v, chi);
    benchmark::DoNotOptimize(enumerate_invariant_max_isotropic(comp));
  }
}
BENCHMARK(BM_EnumerateIsotropicZ7);

void BM_H1Trials(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(montecarlo::simulate_H1(8, 10000, 1));
}
BENCHMARK(BM_H1Trials);

void BM_PellOrbitStep(benchmark::State& state) {
  pell::Rat m(2, 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(pell::orbit_stream(m, 269, 4));
}
BENCHMARK(BM_PellOrbitStep);

void BM_Certify(benchmark::State& state) {
  auto pts = pell::orbit_stream(pell::Rat(2, 13), 269, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(pell::certify_sgnrk1(pts[3].a, pts[3].b));
}
BENCHMARK(BM_Certify);

void BM_MalleTable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(heuristics::conj_sgnrk1_total(3));
}
BENCHMARK(BM_MalleTable);

void BM_CompleteEnumeration(benchmark::State& state) {
  pell::Rat m(2, 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(pell::all_points(m, 0, 5));
}
BENCHMARK(BM_CompleteEnumeration);

void BM_PeriodPolynomial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(oddab::sampler::period_polynomial(819, 0));
}
BENCHMARK(BM_PeriodPolynomial);

}  // namespace

BENCHMARK_MAIN();
