// Parallel kernels against their serial references.
//   ./bench_kernels --benchmark_filter=Gp
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "gpg/catalog.hpp"
#include "gpg/powergraph.hpp"

using namespace gpg;

namespace {

const FiniteGroup& group_for(std::int64_t which) {
  static const FiniteGroup groups[] = {
      build(GroupSpec::cyclic(720)),
      build(GroupSpec::symmetric(5)),
      build(GroupSpec::heisenberg(7)),
      build(GroupSpec::product(GroupSpec::dihedral(30), GroupSpec::cyclic(8))),
  };
  return groups[which];
}

void label(benchmark::State& state) {
  static const char* names[] = {"Z_720", "S_5", "Heis(7)", "D_60 x Z_8"};
  state.SetLabel(names[state.range(0)]);
}

void BM_GpParallel(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generalized_power_graph(g, VertexConvention::Punctured));
  label(state);
}

void BM_GpSerial(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generalized_power_graph_serial(g, VertexConvention::Punctured));
  label(state);
}

void BM_PowerParallel(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_graph(g, VertexConvention::Punctured));
  label(state);
}

void BM_PowerSerial(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_graph_serial(g, VertexConvention::Punctured));
  label(state);
}

void BM_AssocParallel(benchmark::State& state) {
  const auto g = build(GroupSpec::cyclic(std::uint64_t(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_associativity_violation(g.table(), g.order()));
  state.SetComplexityN(state.range(0));
}

void BM_AssocSerial(benchmark::State& state) {
  const auto g = build(GroupSpec::cyclic(std::uint64_t(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_associativity_violation_serial(g.table(), g.order()));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_GpParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GpSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssocParallel)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssocSerial)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
