#include <benchmark/benchmark.h>

#include "tesscensus/analysis.hpp"
#include "tesscensus/census.hpp"
#include "tesscensus/gfsystem.hpp"
#include "tesscensus/polyrat.hpp"
#include "tesscensus/render.hpp"
#include "tesscensus/tessmap.hpp"

using namespace tesscensus;

namespace {

const RationalFunction kEscherDual{Polynomial{6, 6, 6, 6}, Polynomial{1, 0, -1, -2, -1, 0, 1}};

void BM_Build(benchmark::State& state) {
  const VertexConfiguration c({6, 8, 8});
  const auto layers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = build(c, layers);
    benchmark::DoNotOptimize(r.map.dart_count());
  }
}
BENCHMARK(BM_Build)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BuildOctagons(benchmark::State& state) {
  const VertexConfiguration c({8, 8, 8});
  for (auto _ : state) benchmark::DoNotOptimize(build(c, static_cast<std::size_t>(state.range(0))).map.dart_count());
}
BENCHMARK(BM_BuildOctagons)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto r = build(VertexConfiguration({6, 8, 8}), 10);
  const auto seeds = central_seeds(r.map, SeedMode::FaceVertices, 6);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_census(r.map, seeds, 40).valid_through);
  state.counters["vertices"] = static_cast<double>(r.map.vertex_count());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_CensusPipeline(benchmark::State& state) {
  const auto gens = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_for(VertexConfiguration({6, 8, 8}), SeedMode::FaceVertices, gens).report.valid_through);
  }
}
BENCHMARK(BM_CensusPipeline)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Dualize(benchmark::State& state) {
  const auto r = build(VertexConfiguration({6, 8, 8}), 8);
  for (auto _ : state) benchmark::DoNotOptimize(dualize(r.map).dart_count());
}
BENCHMARK(BM_Dualize)->Unit(benchmark::kMillisecond);

void BM_Series(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integer_series(kEscherDual, n).size());
}
BENCHMARK(BM_Series)->RangeMultiplier(4)->Range(64, 4096);

void BM_Fit(benchmark::State& state) {
  const auto terms = integer_series(kEscherDual, static_cast<std::size_t>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(fit_recurrence(terms).order);
}
BENCHMARK(BM_Fit)->Arg(20)->Arg(100)->Arg(400);

void BM_Solve(benchmark::State& state) {
  const auto s = default_escher_system();
  for (auto _ : state) benchmark::DoNotOptimize(solve(s).total.num().degree());
}
BENCHMARK(BM_Solve);

void BM_Growth(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(growth_rate(kEscherDual).rate);
}
BENCHMARK(BM_Growth);

void BM_Layout(benchmark::State& state) {
  const VertexConfiguration c({6, 8, 8});
  const auto r = build(c, static_cast<std::size_t>(state.range(0)));
  const auto census = bfs_census(r.map, central_seeds(r.map, SeedMode::FaceVertices, 6), 64);
  for (auto _ : state) benchmark::DoNotOptimize(layout(r.map, census, c.geometry()).positions.size());
}
BENCHMARK(BM_Layout)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
