#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace seghull {

// Which implementation executes the bulk primitives. Both backends produce
// bit-identical results for every operation; they differ only in speed.
enum class Backend { Sequential, Multicore };

namespace primitives {

// Per-element segment descriptors. Head flags are {0,1} with a 1 at every
// segment start (element 0 always starts a segment). Keys name the segment
// each element belongs to: non-decreasing, gap-free, starting at 0.
using HeadFlags = std::vector<std::int32_t>;
using Keys = std::vector<std::int32_t>;

struct SegmentMax {
  std::int32_t key = 0;
  double value = 0.0;
  std::size_t index = 0;  // smallest index attaining value within the segment

  friend bool operator==(const SegmentMax&, const SegmentMax&) = default;
};

// out[i] = input[0] + ... + input[i]; empty in -> empty out.
std::vector<std::int32_t> inclusive_scan(std::span<const std::int32_t> input,
                                         Backend backend);

// Zero-based segment keys from head flags: inclusive_scan(heads) - 1.
Keys keys_from_heads(std::span<const std::int32_t> heads, Backend backend);

// One entry per segment, in ascending key order: the maximum value within
// the segment and the smallest element index attaining it.
std::vector<SegmentMax> segmented_argmax(std::span<const std::int32_t> keys,
                                         std::span<const double> values,
                                         Backend backend);

// Indices of the minimum and maximum value; ties resolve to the smallest
// index. Throws Errc::EmptyInput on an empty array.
std::pair<std::size_t, std::size_t> minmax_index(std::span<const double> values,
                                                 Backend backend);

// out[i] = largest j <= i with heads[j] == 1, i.e. the global index of the
// element's segment head.
std::vector<std::int32_t> propagate_first_index(std::span<const std::int32_t> heads,
                                                Backend backend);

bool valid_head_flags(std::span<const std::int32_t> heads);
bool valid_keys(std::span<const std::int32_t> keys);

namespace detail {

// Arrays below this size run sequentially even on the multicore backend;
// outputs are identical either way, so the cutover is free to move.
inline constexpr std::size_t parallel_grain = std::size_t{1} << 14;

bool parallel_enabled(Backend backend, std::size_t n);

// Destination row of every element under a stable keep-left partition.
// Returns the number of elements with flag 1.
std::size_t partition_destinations(std::span<const std::int32_t> flags,
                                   Backend backend,
                                   std::vector<std::size_t>& dest);

inline void check_column_size([[maybe_unused]] std::size_t got,
                              [[maybe_unused]] std::size_t want) {
  assert(got == want);
}

}  // namespace detail

// Applies f(i) for every i in [0, n). The multicore backend runs iterations
// in parallel, so f must not touch shared mutable state across indices.
template <class F>
void for_each_index(std::size_t n, Backend backend, F&& f) {
#ifdef _OPENMP
  if (detail::parallel_enabled(backend, n)) {
    const auto last = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < last; ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

// Row-wise stable partition of any number of same-length columns: rows with
// flag 1 move to the front, both groups keep their relative order, and the
// same permutation is applied to every column. Returns the kept count.
// flags is fully consumed before any column moves, so a column may alias it.
template <class... Col>
std::size_t stable_partition_by_flag(std::span<const std::int32_t> flags,
                                     Backend backend, Col&... columns) {
  (detail::check_column_size(columns.size(), flags.size()), ...);
  std::vector<std::size_t> dest;
  const std::size_t kept = detail::partition_destinations(flags, backend, dest);
  const std::size_t n = flags.size();
  auto scatter = [&](auto& column) {
    std::remove_reference_t<decltype(column)> reordered(column.size());
    for_each_index(n, backend,
                   [&](std::size_t i) { reordered[dest[i]] = column[i]; });
    column.swap(reordered);
  };
  (scatter(columns), ...);
  return kept;
}

}  // namespace primitives
}  // namespace seghull
