#include <benchmark/benchmark.h>

#include "severi/partition.hpp"

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::enumerate_partitions(d, 3));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 12, 3);

void BM_ConnectedComponents(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::connected_components(d, 3));
}
BENCHMARK(BM_ConnectedComponents)->DenseRange(6, 12, 3);

void BM_CanonicalPath(benchmark::State& state) {
  const auto all = severi::enumerate_partitions(10, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(severi::canonical_path(all[i]));
    i = (i + 1) % all.size();
  }
}
BENCHMARK(BM_CanonicalPath);

}  // namespace
