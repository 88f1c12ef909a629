#include "seghull/hull.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <future>
#include <string>

#include "seghull/error.hpp"

namespace seghull::hull {

namespace {

using primitives::for_each_index;
using primitives::SegmentMax;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Extremes {
  std::size_t left = 0;    // min x, tie: min y
  std::size_t bottom = 0;  // min y, tie: max x
  std::size_t right = 0;   // max x, tie: max y
  std::size_t top = 0;     // max y, tie: min x
};

// Directional tie-breaks make (left, bottom, right, top) a CCW
// quadrilateral even when extremes coincide, and make left/right the
// canonical first and last vertices of the lower chain.
Extremes find_extremes(const PointSet& pts) {
  Extremes e;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double x = pts.x[i], y = pts.y[i];
    if (x < pts.x[e.left] || (x == pts.x[e.left] && y < pts.y[e.left])) e.left = i;
    if (x > pts.x[e.right] || (x == pts.x[e.right] && y > pts.y[e.right])) e.right = i;
    if (y < pts.y[e.bottom] || (y == pts.y[e.bottom] && x > pts.x[e.bottom])) e.bottom = i;
    if (y > pts.y[e.top] || (y == pts.y[e.top] && x < pts.x[e.top])) e.top = i;
  }
  return e;
}

bool lex_less(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

}  // namespace

std::pair<PointSet, std::size_t> preprocess(const PointSet& points, Backend backend) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::EmptyInput, "preprocess: empty point set");

  const Extremes e = find_extremes(points);
  const std::array<Point, 4> corners = {points.point(e.left), points.point(e.bottom),
                                        points.point(e.right), points.point(e.top)};

  // hoisted edge list of the quadrilateral; the per-point test is the same
  // strict-interior rule as strictly_inside_convex
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen |= corners[i] == corners[j];
    if (!seen) ++distinct;
  }
  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Point a = corners[i];
    const Point b = corners[(i + 1) % corners.size()];
    if (!(a == b)) edges.emplace_back(a, b);
  }

  std::vector<std::int32_t> keep(n);
  if (distinct < 3) {
    keep.assign(n, 1);  // degenerate quadrilateral has no strict interior
  } else {
    for_each_index(n, backend, [&](std::size_t i) {
      const Point p = points.point(i);
      bool inside = true;
      for (const auto& [a, b] : edges) {
        if (cross(a, b, p) <= 0.0) {
          inside = false;
          break;
        }
      }
      keep[i] = inside ? 0 : 1;
    });
  }

  PointSet out = points;
  const std::size_t kept =
      primitives::stable_partition_by_flag(keep, backend, out.x, out.y);
  out.x.resize(kept);
  out.y.resize(kept);
  return {std::move(out), n - kept};
}

HullState first_split(const PointSet& points, Backend backend) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::EmptyInput, "first_split: empty point set");

  const Extremes e = find_extremes(points);
  const Point p0 = points.point(e.left);
  const Point pr = points.point(e.right);
  if (p0 == pr) {
    throw Error(Errc::DegenerateInput, "first_split: fewer than 2 distinct points");
  }

  // Strictly-below points form the lower chain; everything else (including
  // points on the line) goes upper. P0 itself leads the lower chain.
  std::vector<std::int32_t> in_lower(n);
  for_each_index(n, backend, [&](std::size_t i) {
    in_lower[i] = cross(p0, pr, points.point(i)) < 0.0 ? 1 : 0;
  });
  in_lower[e.left] = 1;

  std::vector<Point> rows(n);
  for_each_index(n, backend, [&](std::size_t i) { rows[i] = points.point(i); });
  const std::size_t lower_count =
      primitives::stable_partition_by_flag(in_lower, backend, rows);
  assert(lower_count >= 1 && lower_count < n);  // P0 is lower, Pr is upper

  auto sort_lower = [&] {
    std::sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(lower_count),
              lex_less);
  };
  auto sort_upper = [&] {
    std::sort(rows.begin() + static_cast<std::ptrdiff_t>(lower_count), rows.end(),
              [](const Point& a, const Point& b) { return lex_less(b, a); });
  };
  if (backend == Backend::Multicore && n >= 2 * primitives::detail::parallel_grain) {
    auto lower_done = std::async(std::launch::async, sort_lower);
    sort_upper();
    lower_done.get();
  } else {
    sort_lower();
    sort_upper();
  }

  HullState state;
  state.x.resize(n);
  state.y.resize(n);
  for_each_index(n, backend, [&](std::size_t i) {
    state.x[i] = rows[i].x;
    state.y[i] = rows[i].y;
  });
  state.dist.assign(n, 0.0);
  state.head.assign(n, 0);
  state.head[0] = 1;
  state.head[lower_count] = 1;  // the upper chain is never empty: it holds Pr
  state.keys = primitives::keys_from_heads(state.head, backend);
  state.first_pts = primitives::propagate_first_index(state.head, backend);
  state.flag.assign(n, 1);
  return state;
}

void compute_distances(HullState& state, Backend backend) {
  const std::size_t n = state.size();
  if (n == 0) return;
  const std::size_t nseg = state.segments();

  std::vector<std::int32_t> head_of_segment(nseg);
  for_each_index(n, backend, [&](std::size_t i) {
    if (state.head[i]) head_of_segment[state.keys[i]] = static_cast<std::int32_t>(i);
  });

  // A segment's base line runs from its own head to the next segment's head;
  // the last segment wraps around to element 0. Heads measure zero against
  // their own line.
  for_each_index(n, backend, [&](std::size_t i) {
    const Point first = state.point(static_cast<std::size_t>(state.first_pts[i]));
    const auto k = static_cast<std::size_t>(state.keys[i]);
    const std::size_t last_index =
        k + 1 < nseg ? static_cast<std::size_t>(head_of_segment[k + 1]) : 0;
    state.dist[i] = outward_distance(first, state.point(last_index), state.point(i));
  });
}

std::vector<SegmentMax> find_farthest(const HullState& state, Backend backend) {
  return primitives::segmented_argmax(state.keys, state.dist, backend);
}

void split_segments(HullState& state, std::span<const SegmentMax> farthest,
                    Backend backend) {
  for_each_index(farthest.size(), backend, [&](std::size_t j) {
    const SegmentMax& e = farthest[j];
    if (e.value > 0.0) state.head[e.index] = 1;
  });
  state.keys = primitives::keys_from_heads(state.head, backend);
  state.first_pts = primitives::propagate_first_index(state.head, backend);
}

void mark_interior(HullState& state, Backend backend) {
  compute_distances(state, backend);
  for_each_index(state.size(), backend, [&](std::size_t i) {
    state.flag[i] = (state.head[i] != 0 || state.dist[i] > 0.0) ? 1 : 0;
  });
}

std::size_t compact(HullState& state, Backend backend) {
  const std::size_t before = state.size();
  // first_pts is rebuilt below, so it does not ride through the partition.
  const std::size_t kept = primitives::stable_partition_by_flag(
      state.flag, backend, state.x, state.y, state.dist, state.head, state.keys,
      state.flag);
  state.x.resize(kept);
  state.y.resize(kept);
  state.dist.resize(kept);
  state.head.resize(kept);
  state.keys.resize(kept);
  state.flag.resize(kept);
  state.first_pts = primitives::propagate_first_index(state.head, backend);
  return before - kept;
}

HullResult run(const PointSet& points, Mode mode, Backend backend) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::EmptyInput, "run: empty point set");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points.x[i]) || !std::isfinite(points.y[i])) {
      throw Error(Errc::NonFiniteInput,
                  "run: non-finite coordinate at index " + std::to_string(i));
    }
  }

  HullResult result;

  const Extremes e = find_extremes(points);
  const Point lo = points.point(e.left);
  const Point hi = points.point(e.right);
  if (lo == hi) {  // single point or all points identical
    result.vertices = {lo};
    return result;
  }
  bool collinear = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(lo, hi, points.point(i)) != 0.0) {
      collinear = false;
      break;
    }
  }
  if (collinear) {
    result.vertices = {lo, hi};
    return result;
  }

  const PointSet* source = &points;
  PointSet filtered;
  if (mode == Mode::WithPreprocess) {
    const auto t0 = Clock::now();
    filtered = preprocess(points, backend).first;
    result.phase_timings.pre_ms = ms_since(t0);
    source = &filtered;
  }

  const auto t1 = Clock::now();
  HullState state = first_split(*source, backend);
  result.phase_timings.split_ms = ms_since(t1);

  const auto t2 = Clock::now();
  for (std::size_t iteration = 1;; ++iteration) {
    if (iteration > n) {
      throw Error(Errc::InternalError, "run: refinement failed to terminate");
    }
    compute_distances(state, backend);
    const auto farthest = find_farthest(state, backend);
    bool splittable = false;
    for (const SegmentMax& f : farthest) {
      if (f.value > 0.0) {
        splittable = true;
        break;
      }
    }
    if (!splittable && state.size() == farthest.size()) break;
    split_segments(state, farthest, backend);
    mark_interior(state, backend);
    const std::size_t removed = compact(state, backend);
    result.stats.push_back({iteration, state.segments(), state.size(), removed});
  }
  result.phase_timings.recurse_ms = ms_since(t2);

  result.vertices.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    result.vertices.push_back(state.point(i));
  }
  return result;
}

}  // namespace seghull::hull
