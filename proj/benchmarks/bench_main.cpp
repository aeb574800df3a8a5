#include <benchmark/benchmark.h>

#include "reebforge/fiber_power.hpp"
#include "reebforge/fixtures.hpp"
#include "reebforge/homology.hpp"
#include "reebforge/reeb.hpp"
#include "reebforge/reeb_graph.hpp"

using namespace reebforge;

static void BM_BettiTorusProduct(benchmark::State& state) {
  const auto k = staircase_product(minimal_torus(), circle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(betti(k));
  state.counters["simplices"] = static_cast<double>(k.size());
}
BENCHMARK(BM_BettiTorusProduct)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BettiSubdividedProduct(benchmark::State& state) {
  const auto k = *barycentric_subdivision(staircase_product(circle(3), tetrahedron_boundary())).complex;
  for (auto _ : state) benchmark::DoNotOptimize(betti(k));
  state.counters["simplices"] = static_cast<double>(k.size());
}
BENCHMARK(BM_BettiSubdividedProduct)->Unit(benchmark::kMillisecond);

static void BM_ReebSpaceDisk(benchmark::State& state) {
  const auto f = disk_collapse(2);
  for (auto _ : state) benchmark::DoNotOptimize(reeb_space(f));
}
BENCHMARK(BM_ReebSpaceDisk)->Unit(benchmark::kMillisecond);

static void BM_ReebSpaceProduct(benchmark::State& state) {
  const auto f = product_power(disk_collapse(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reeb_space(f, {.build_quotient_map = false}));
}
BENCHMARK(BM_ReebSpaceProduct)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_ReebGraphRandom(benchmark::State& state) {
  const auto g = random_function(3, {.max_vertices = static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(reeb_graph(g));
}
BENCHMARK(BM_ReebGraphRandom)->Arg(10)->Arg(100)->Arg(1000);

static void BM_FiberPowerCells(benchmark::State& state) {
  const auto f = disk_collapse(2);
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_power_betti(f, p));
}
BENCHMARK(BM_FiberPowerCells)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_FiberPowerNerve(benchmark::State& state) {
  const auto f = constant_map(share(circle(4)));
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_power_betti(f, p, FiberPowerMethod::Nerve));
}
BENCHMARK(BM_FiberPowerNerve)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
