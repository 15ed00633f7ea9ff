// Serial reference vs OpenMP map over generated auctions.
#include <benchmark/benchmark.h>

#include "envyic/dataset.hpp"
#include "envyic/experiments.hpp"

namespace {

using namespace envyic;
using namespace envyic::harness;

void BM_GreedyDataset(benchmark::State& state) {
  const auto execution = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  const GeneratorConfig cfg;
  for (auto _ : state) {
    auto rows = build_dataset(cfg, 200, adtypes::GreedyRule::Gsp, execution);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_GreedyDataset)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_GfpSanity(benchmark::State& state) {
  const auto execution = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  GeneratorConfig cfg;
  cfg.n_slots = 10;
  cfg.curve_classes = {Money(9, 10)};
  for (auto _ : state) {
    auto result = gfp_sanity_experiment(cfg, 100, execution);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GfpSanity)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
