#include <benchmark/benchmark.h>

#include "severi/lattice.hpp"
#include "severi/symplectic.hpp"

namespace {

void BM_EnumerateByIndex(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::enumerate_by_index(n));
}
BENCHMARK(BM_EnumerateByIndex)->Arg(60)->Arg(360)->Arg(5040);

void BM_ComponentFormula(benchmark::State& state) {
  const severi::Integer d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(severi::count_components_formula(d, 3));
}
BENCHMARK(BM_ComponentFormula)->Arg(60)->Arg(720720);

void BM_EnumerateSublattices4(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::enumerate_sublattices4(k, k));
}
BENCHMARK(BM_EnumerateSublattices4)->DenseRange(2, 8, 2);

void BM_VerifyLemma(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::verify_lemma_equivalence(6, k, k));
}
BENCHMARK(BM_VerifyLemma)->Arg(4)->Arg(6);

}  // namespace
