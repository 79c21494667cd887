#include <benchmark/benchmark.h>

#include "catalan/kernels.hpp"

using namespace catalan::kernels;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_tree_leaf_parity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_leaf_parity(state.range(0), mode_of(state)));
  label(state);
}
BENCHMARK(BM_tree_leaf_parity)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_leaf_level_histograms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_leaf_and_level_histograms(state.range(0), mode_of(state)));
  label(state);
}
BENCHMARK(BM_leaf_level_histograms)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_path_statistic_parity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(path_statistic_parity(state.range(0), mode_of(state)));
  label(state);
}
BENCHMARK(BM_path_statistic_parity)->ArgsProduct({{9, 11, 13}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_udu_row(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(udu_row(state.range(0), mode_of(state)));
  label(state);
}
BENCHMARK(BM_udu_row)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_labelled_leaf_parity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(labelled_leaf_parity(state.range(0), mode_of(state)));
  label(state);
}
BENCHMARK(BM_labelled_leaf_parity)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
