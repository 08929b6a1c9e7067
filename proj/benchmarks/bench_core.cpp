// Microbenchmarks for the hot paths: series composition, operator assembly
// and the symmetry defect measurements. Run with --benchmark_filter=... to
// narrow; these are for watching regressions, not part of the test gate.

#include <benchmark/benchmark.h>

#include "koenigslab/csym.hpp"

using namespace koenigslab;

namespace {

SymbolSpec pair_symbol() {
  return BlaschkePairSymbol{DiskPoint{Cx(0.5, 0.0)}, Cx(0.3, 0.0)};
}

void bm_compose(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TaylorSeries phi = symbol_series(pair_symbol(), order);
  const TaylorSeries f = kernel_series(DiskPoint{Cx(0.3, 0.1)}, 1, order);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, phi));
  state.SetComplexityN(order);
}
BENCHMARK(bm_compose)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNCubed);

void bm_power_table_apply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const PowerTable table(symbol_series(pair_symbol(), order));
  const TaylorSeries f = kernel_series(DiskPoint{Cx(0.3, 0.1)}, 1, order);
  for (auto _ : state) benchmark::DoNotOptimize(table.apply(f));
  state.SetComplexityN(order);
}
BENCHMARK(bm_power_table_apply)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

void bm_composition_matrix(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SymbolSpec s = pair_symbol();
  for (auto _ : state) benchmark::DoNotOptimize(composition_matrix(s, order));
}
BENCHMARK(bm_composition_matrix)->Arg(64)->Arg(128)->Arg(256);

void bm_kernel_conjugation(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_conjugation(0.5, order));
}
BENCHMARK(bm_kernel_conjugation)->Arg(64)->Arg(128)->Arg(256);

void bm_koenigs_iterate(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SymbolSpec s = pair_symbol();
  for (auto _ : state) benchmark::DoNotOptimize(koenigs_iterate(s, order));
}
BENCHMARK(bm_koenigs_iterate)->Arg(64)->Arg(128)->Arg(256);

void bm_koenigs_recurrence(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SymbolSpec s = pair_symbol();
  for (auto _ : state) benchmark::DoNotOptimize(koenigs_recurrence(s, order));
}
BENCHMARK(bm_koenigs_recurrence)->Arg(64)->Arg(128)->Arg(256);

void bm_csym_defect(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const OperatorMatrix m =
      composition_matrix(AffineSymbol{Cx(0.5, 0.0), Cx(0.25, 0.0)}, order);
  const ConjugationRep j = kernel_conjugation(0.5, order);
  for (auto _ : state) benchmark::DoNotOptimize(csym_defect(m, j, order / 4));
}
BENCHMARK(bm_csym_defect)->Arg(64)->Arg(128)->Arg(256);

void bm_conjugate_gram(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const ConjugationRep j = kernel_conjugation(0.5, order);
  const std::vector<TaylorSeries> seq = koenigs_sequence(
      TaylorSeries::linear(Cx(-0.5, 0.0), Cx(1.0, 0.0), order), 20);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_gram(j, seq));
}
BENCHMARK(bm_conjugate_gram)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
