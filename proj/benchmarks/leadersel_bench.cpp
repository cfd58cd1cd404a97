#include <benchmark/benchmark.h>

#include "leadersel/leadersel.hpp"

using namespace leadersel;

namespace {

SegmentMatrix block(std::size_t m, Metric metric) {
  const auto spec = uniform_policy({Topology::Path, m + 2, metric}, 1);
  return segment_matrix(spec, segment_between(spec, NodeId{1}, NodeId{m + 2}));
}

void BM_TraceInverse(benchmark::State& state) {
  const auto m = block(static_cast<std::size_t>(state.range(0)), Metric::Coherence);
  for (auto _ : state) benchmark::DoNotOptimize(trace_inverse(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceInverse)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_MinEigenvalue(benchmark::State& state) {
  const auto m = block(static_cast<std::size_t>(state.range(0)), Metric::Convergence);
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinEigenvalue)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_OptimalPath(benchmark::State& state) {
  const auto spec = uniform_policy({Topology::Path, static_cast<std::size_t>(state.range(0)), Metric::Coherence}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal(spec, 40));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalPath)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_OptimalRing(benchmark::State& state) {
  const auto spec = uniform_policy({Topology::Ring, static_cast<std::size_t>(state.range(0)), Metric::Coherence}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal(spec, 20));
}
BENCHMARK(BM_OptimalRing)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto spec = uniform_policy({Topology::Path, static_cast<std::size_t>(state.range(0)), Metric::Coherence}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(greedy(spec, 40));
}
BENCHMARK(BM_Greedy)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
