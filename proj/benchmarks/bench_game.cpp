#include <benchmark/benchmark.h>

#include "severi/cli/poly_expr.hpp"
#include "severi/weierstrass.hpp"

namespace {

void BM_PlayPerfectPower(benchmark::State& state) {
  const auto p = severi::cli::parse_poly("(x - t - t^2)^3");
  const auto rounds = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(severi::play_game(p, 1, rounds));
}
BENCHMARK(BM_PlayPerfectPower)->Arg(16)->Arg(64);

void BM_FindMu(benchmark::State& state) {
  const auto p = severi::cli::parse_poly("x^4 - t^3 + t^5*x");
  for (auto _ : state) benchmark::DoNotOptimize(severi::find_mu_search(p, 8));
}
BENCHMARK(BM_FindMu);

void BM_ParsePoly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(severi::cli::parse_poly("(x - t)*(x - 2*t)*(x - 3*t^2) + t^9"));
}
BENCHMARK(BM_ParsePoly);

}  // namespace
