#include <benchmark/benchmark.h>

#include <random>

#include "normgraph/norm_graph.hpp"
#include "normgraph/witness_general.hpp"
#include "normgraph/witness_k46.hpp"

using namespace normgraph;

namespace {

void BM_Norm(benchmark::State& state) {
  const ExtField F(static_cast<std::uint64_t>(state.range(0)), {-2, 0, 0, 1});
  std::mt19937_64 rng(1);
  std::vector<ExtElement> xs;
  for (int i = 0; i < 256; ++i)
    xs.push_back(F.element({static_cast<std::int64_t>(rng() % F.p()), static_cast<std::int64_t>(rng() % F.p()),
                            static_cast<std::int64_t>(rng() % F.p())}));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(F.conjugate_norm(xs[i++ & 255]));
}
BENCHMARK(BM_Norm)->Arg(7)->Arg(1000003);

void BM_Census(benchmark::State& state) {
  const NormGraph g(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(census_max_common(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve_qualifying(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Sieve)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_FindParameters(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_parameters(4, static_cast<int>(state.range(0)), 500));
}
BENCHMARK(BM_FindParameters)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
