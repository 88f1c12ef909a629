#include <benchmark/benchmark.h>

#include "seghull/dataio.hpp"
#include "seghull/hull.hpp"
#include "seghull/oracle.hpp"

namespace {

using namespace seghull;

void BM_HullUniform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mode = static_cast<hull::Mode>(state.range(1));
  const Backend backend = state.range(2) ? Backend::Multicore : Backend::Sequential;
  const PointSet pts = gen_uniform(n, 1);
  for (auto _ : state) {
    auto result = hull::run(pts, mode, backend);
    benchmark::DoNotOptimize(result.vertices.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_HullCircle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mode = static_cast<hull::Mode>(state.range(1));
  const Backend backend = state.range(2) ? Backend::Multicore : Backend::Sequential;
  const PointSet pts = gen_circle(n, 1);
  for (auto _ : state) {
    auto result = hull::run(pts, mode, backend);
    benchmark::DoNotOptimize(result.vertices.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_MonotoneChainBaseline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointSet pts = gen_uniform(n, 1);
  for (auto _ : state) {
    auto hull = oracle::monotone_chain(pts);
    benchmark::DoNotOptimize(hull.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

BENCHMARK(BM_HullUniform)->ArgsProduct({{100000, 1000000}, {1, 2}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HullCircle)->ArgsProduct({{100000}, {1, 2}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonotoneChainBaseline)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
