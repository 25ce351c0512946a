#include <benchmark/benchmark.h>

#include "confmodel/config_model.hpp"
#include "confmodel/kernels.hpp"
#include "confmodel/parameters.hpp"

using namespace confmodel;

namespace {

Multigraph cubic(std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  return sample_uniform_graph(DegreeSequence(std::vector<std::size_t>(n, 3)), rng);
}

void BM_MaxCutReference(benchmark::State& state) {
  const auto g = cubic(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_cut_reference(g));
}

void BM_MaxCutParallel(benchmark::State& state) {
  const auto g = cubic(static_cast<std::size_t>(state.range(0)), 1);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_cut_parallel(g, workers));
}

void BM_LogPartitionReference(benchmark::State& state) {
  const auto g = cubic(static_cast<std::size_t>(state.range(0)), 2);
  const auto model = potts_model(3, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::log_partition_reference(g, model.log_weights()));
}

void BM_LogPartitionParallel(benchmark::State& state) {
  const auto g = cubic(static_cast<std::size_t>(state.range(0)), 2);
  const auto model = potts_model(3, 1.0);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::log_partition_parallel(g, model.log_weights(), workers));
}

/// Sample-and-evaluate replications, as in the limit estimators.
void BM_Replications(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  const DegreeSequence d(std::vector<std::size_t>(2000, 2));
  const RandomStream root(3);
  const auto f = independence_parameter();
  auto rep = [&](std::size_t r) {
    RandomStream s = root.substream(r);
    return f(sample_uniform_graph(d, s));
  };
  for (auto _ : state) {
    auto out = workers == 0 ? kernels::parallel_map_serial(64, rep) : kernels::parallel_map(64, workers, rep);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_MaxCutReference)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCutParallel)->Args({16, 1})->Args({20, 1})->Args({20, 2})->Args({20, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogPartitionReference)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogPartitionParallel)->Args({10, 1})->Args({12, 1})->Args({12, 2})->Args({12, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replications)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
