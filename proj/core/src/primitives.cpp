#include "seghull/primitives.hpp"

#include <limits>

#include "seghull/error.hpp"

namespace seghull::primitives {

namespace {

using detail::parallel_grain;

// Fixed block decomposition, a pure function of n. All per-block partials
// combine with exact (order-insensitive) operations, so the blocked paths
// reproduce the sequential results bit for bit.
struct Blocks {
  std::size_t n = 0;
  std::size_t count = 0;

  explicit Blocks(std::size_t total)
      : n(total), count(total == 0 ? 0 : (total + parallel_grain - 1) / parallel_grain) {}

  std::size_t begin(std::size_t b) const { return b * parallel_grain; }
  std::size_t end(std::size_t b) const {
    const std::size_t e = (b + 1) * parallel_grain;
    return e < n ? e : n;
  }
};

void append_segment_max(std::vector<SegmentMax>& acc, std::int32_t key,
                        double value, std::size_t index) {
  if (!acc.empty() && acc.back().key == key) {
    if (value > acc.back().value) acc.back() = {key, value, index};
  } else {
    acc.push_back({key, value, index});
  }
}

void argmax_walk(std::span<const std::int32_t> keys,
                 std::span<const double> values, std::size_t lo, std::size_t hi,
                 std::vector<SegmentMax>& acc) {
  for (std::size_t i = lo; i < hi; ++i) {
    append_segment_max(acc, keys[i], values[i], i);
  }
}

}  // namespace

bool detail::parallel_enabled(Backend backend, std::size_t n) {
#ifdef _OPENMP
  return backend == Backend::Multicore && n >= 2 * parallel_grain;
#else
  (void)backend;
  (void)n;
  return false;
#endif
}

std::vector<std::int32_t> inclusive_scan(std::span<const std::int32_t> input,
                                         Backend backend) {
  const std::size_t n = input.size();
  std::vector<std::int32_t> out(n);
  if (!detail::parallel_enabled(backend, n)) {
    std::int32_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += input[i];
      out[i] = acc;
    }
    return out;
  }
#ifdef _OPENMP
  const Blocks blocks(n);
  std::vector<std::int32_t> offset(blocks.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    std::int32_t sum = 0;
    const std::size_t hi = blocks.end(static_cast<std::size_t>(b));
    for (std::size_t i = blocks.begin(static_cast<std::size_t>(b)); i < hi; ++i) {
      sum += input[i];
    }
    offset[static_cast<std::size_t>(b)] = sum;
  }
  std::int32_t running = 0;
  for (std::size_t b = 0; b < blocks.count; ++b) {
    const std::int32_t sum = offset[b];
    offset[b] = running;
    running += sum;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    std::int32_t acc = offset[static_cast<std::size_t>(b)];
    const std::size_t hi = blocks.end(static_cast<std::size_t>(b));
    for (std::size_t i = blocks.begin(static_cast<std::size_t>(b)); i < hi; ++i) {
      acc += input[i];
      out[i] = acc;
    }
  }
#endif
  return out;
}

Keys keys_from_heads(std::span<const std::int32_t> heads, Backend backend) {
  Keys keys = inclusive_scan(heads, backend);
  for_each_index(keys.size(), backend, [&](std::size_t i) { keys[i] -= 1; });
  return keys;
}

std::vector<SegmentMax> segmented_argmax(std::span<const std::int32_t> keys,
                                         std::span<const double> values,
                                         Backend backend) {
  assert(keys.size() == values.size());
  const std::size_t n = keys.size();
  std::vector<SegmentMax> out;
  if (n == 0) return out;
  if (!detail::parallel_enabled(backend, n)) {
    out.reserve(static_cast<std::size_t>(keys[n - 1]) + 1);
    argmax_walk(keys, values, 0, n, out);
    return out;
  }
#ifdef _OPENMP
  const Blocks blocks(n);
  std::vector<std::vector<SegmentMax>> partial(blocks.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    argmax_walk(keys, values, blocks.begin(bi), blocks.end(bi), partial[bi]);
  }
  out.reserve(static_cast<std::size_t>(keys[n - 1]) + 1);
  for (const auto& part : partial) {
    for (const SegmentMax& e : part) {
      append_segment_max(out, e.key, e.value, e.index);
    }
  }
#endif
  return out;
}

std::pair<std::size_t, std::size_t> minmax_index(std::span<const double> values,
                                                 Backend backend) {
  const std::size_t n = values.size();
  if (n == 0) throw Error(Errc::EmptyInput, "minmax_index: empty input");
  if (!detail::parallel_enabled(backend, n)) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (values[i] < values[lo]) lo = i;
      if (values[i] > values[hi]) hi = i;
    }
    return {lo, hi};
  }
#ifdef _OPENMP
  const Blocks blocks(n);
  std::vector<std::size_t> lo_of(blocks.count), hi_of(blocks.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    std::size_t lo = blocks.begin(bi), hi = blocks.begin(bi);
    for (std::size_t i = lo + 1; i < blocks.end(bi); ++i) {
      if (values[i] < values[lo]) lo = i;
      if (values[i] > values[hi]) hi = i;
    }
    lo_of[bi] = lo;
    hi_of[bi] = hi;
  }
  std::size_t lo = lo_of[0], hi = hi_of[0];
  for (std::size_t b = 1; b < blocks.count; ++b) {
    if (values[lo_of[b]] < values[lo]) lo = lo_of[b];
    if (values[hi_of[b]] > values[hi]) hi = hi_of[b];
  }
  return {lo, hi};
#else
  return {0, 0};  // unreachable
#endif
}

std::vector<std::int32_t> propagate_first_index(std::span<const std::int32_t> heads,
                                                Backend backend) {
  const std::size_t n = heads.size();
  assert(n <= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()));
  std::vector<std::int32_t> out(n);
  if (!detail::parallel_enabled(backend, n)) {
    std::int32_t current = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (heads[i]) current = static_cast<std::int32_t>(i);
      out[i] = current;
    }
    return out;
  }
#ifdef _OPENMP
  const Blocks blocks(n);
  std::vector<std::int32_t> last_head(blocks.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    std::int32_t last = -1;
    for (std::size_t i = blocks.begin(bi); i < blocks.end(bi); ++i) {
      if (heads[i]) last = static_cast<std::int32_t>(i);
    }
    last_head[bi] = last;
  }
  std::vector<std::int32_t> carry(blocks.count);
  std::int32_t running = 0;  // heads[0] == 1 for valid input
  for (std::size_t b = 0; b < blocks.count; ++b) {
    carry[b] = running;
    if (last_head[b] >= 0) running = last_head[b];
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    std::int32_t current = carry[bi];
    for (std::size_t i = blocks.begin(bi); i < blocks.end(bi); ++i) {
      if (heads[i]) current = static_cast<std::int32_t>(i);
      out[i] = current;
    }
  }
#endif
  return out;
}

bool valid_head_flags(std::span<const std::int32_t> heads) {
  if (heads.empty()) return true;
  if (heads[0] != 1) return false;
  for (const std::int32_t h : heads) {
    if (h != 0 && h != 1) return false;
  }
  return true;
}

bool valid_keys(std::span<const std::int32_t> keys) {
  if (keys.empty()) return true;
  if (keys[0] != 0) return false;
  for (std::size_t i = 1; i < keys.size(); ++i) {
    const std::int32_t step = keys[i] - keys[i - 1];
    if (step != 0 && step != 1) return false;
  }
  return true;
}

std::size_t detail::partition_destinations(std::span<const std::int32_t> flags,
                                           Backend backend,
                                           std::vector<std::size_t>& dest) {
  const std::size_t n = flags.size();
  dest.resize(n);
  if (!parallel_enabled(backend, n)) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (flags[i]) ++ones;
    }
    std::size_t next_one = 0, next_zero = ones;
    for (std::size_t i = 0; i < n; ++i) {
      dest[i] = flags[i] ? next_one++ : next_zero++;
    }
    return ones;
  }
#ifdef _OPENMP
  const Blocks blocks(n);
  std::vector<std::size_t> ones_before(blocks.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    std::size_t ones = 0;
    for (std::size_t i = blocks.begin(bi); i < blocks.end(bi); ++i) {
      if (flags[i]) ++ones;
    }
    ones_before[bi] = ones;
  }
  std::size_t total_ones = 0;
  for (std::size_t b = 0; b < blocks.count; ++b) {
    const std::size_t ones = ones_before[b];
    ones_before[b] = total_ones;
    total_ones += ones;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.count); ++b) {
    const auto bi = static_cast<std::size_t>(b);
    std::size_t next_one = ones_before[bi];
    std::size_t next_zero = total_ones + (blocks.begin(bi) - ones_before[bi]);
    for (std::size_t i = blocks.begin(bi); i < blocks.end(bi); ++i) {
      dest[i] = flags[i] ? next_one++ : next_zero++;
    }
  }
  return total_ones;
#else
  return 0;  // unreachable
#endif
}

}  // namespace seghull::primitives
