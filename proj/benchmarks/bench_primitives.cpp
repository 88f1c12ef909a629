#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "seghull/dataio.hpp"
#include "seghull/primitives.hpp"

namespace {

using namespace seghull;
namespace prim = seghull::primitives;

Backend backend_arg(const benchmark::State& state) {
  return state.range(1) ? Backend::Multicore : Backend::Sequential;
}

std::vector<std::int32_t> random_flags(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::int32_t> flags(n);
  for (auto& f : flags) f = static_cast<std::int32_t>(rng.next() & 1);
  return flags;
}

void BM_InclusiveScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto flags = random_flags(n, 7);
  for (auto _ : state) {
    auto out = prim::inclusive_scan(flags, backend_arg(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_SegmentedArgmax(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(11);
  std::vector<std::int32_t> heads(n);
  for (std::size_t i = 0; i < n; ++i) heads[i] = (rng.next() & 63) == 0 ? 1 : 0;
  if (n > 0) heads[0] = 1;
  const auto keys = prim::keys_from_heads(heads, Backend::Sequential);
  std::vector<double> values(n);
  for (auto& v : values) v = rng.next_double();
  for (auto _ : state) {
    auto out = prim::segmented_argmax(keys, values, backend_arg(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_StablePartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto flags = random_flags(n, 23);
  const PointSet pts = gen_uniform(n, 23);
  for (auto _ : state) {
    auto xs = pts.x;
    auto ys = pts.y;
    const std::size_t kept =
        prim::stable_partition_by_flag(flags, backend_arg(state), xs, ys);
    benchmark::DoNotOptimize(kept);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_PropagateFirstIndex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto heads = random_flags(n, 41);
  if (n > 0) heads[0] = 1;
  for (auto _ : state) {
    auto out = prim::propagate_first_index(heads, backend_arg(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

BENCHMARK(BM_InclusiveScan)->ArgsProduct({{1 << 16, 1 << 20, 1 << 22}, {0, 1}});
BENCHMARK(BM_SegmentedArgmax)->ArgsProduct({{1 << 16, 1 << 20, 1 << 22}, {0, 1}});
BENCHMARK(BM_StablePartition)->ArgsProduct({{1 << 16, 1 << 20, 1 << 22}, {0, 1}});
BENCHMARK(BM_PropagateFirstIndex)->ArgsProduct({{1 << 16, 1 << 20, 1 << 22}, {0, 1}});

}  // namespace
