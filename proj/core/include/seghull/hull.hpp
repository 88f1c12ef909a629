#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "seghull/dataio.hpp"
#include "seghull/geometry.hpp"
#include "seghull/primitives.hpp"

namespace seghull::hull {

// Row-aligned working arrays of the pipeline. Rows are points; the segment
// structure lives in head/keys/first_pts. All seven arrays keep identical
// length through every stage, and each segment is a contiguous run whose
// points stay sorted by x (ascending in the lower chain, descending in the
// upper chain).
struct HullState {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> dist;        // signed outward measure vs the segment's base line
  primitives::HeadFlags head;      // 1 at segment starts; element 0 always starts one
  primitives::Keys keys;           // segment id per element
  std::vector<std::int32_t> first_pts;  // global index of the element's segment head
  std::vector<std::int32_t> flag;       // 1 = survives the next compaction

  std::size_t size() const { return x.size(); }
  std::size_t segments() const {
    return keys.empty() ? 0 : static_cast<std::size_t>(keys.back()) + 1;
  }
  Point point(std::size_t i) const { return {x[i], y[i]}; }
};

struct SegmentStats {
  std::size_t iteration = 0;
  std::size_t segments = 0;
  std::size_t points_remaining = 0;
  std::size_t points_removed = 0;
};

struct PhaseTimings {
  double pre_ms = 0.0;      // extreme-quadrilateral filtering
  double split_ms = 0.0;    // chain construction: classify + partition + sort
  double recurse_ms = 0.0;  // iterative refinement until only hull vertices remain
};

enum class Mode : int {
  WithPreprocess = 1,  // discard clearly-interior points before splitting
  WithoutPreprocess = 2,
};

struct HullResult {
  // Simple convex polygon, CCW, starting at the leftmost vertex (ties:
  // lowest y); degenerate inputs yield 1 or 2 vertices.
  std::vector<Point> vertices;
  std::vector<SegmentStats> stats;  // one entry per refinement iteration
  PhaseTimings phase_timings;
};

// Discards points strictly inside the quadrilateral spanned by the four
// coordinate extremes. Returns the filtered set and the discard count; the
// hull of the output equals the hull of the input.
std::pair<PointSet, std::size_t> preprocess(const PointSet& points, Backend backend);

// Splits points into the lower/upper chain around the leftmost->rightmost
// line, sorts each chain, and lays both out as one array that reads as a
// CCW polygon wrapping around at element 0.
HullState first_split(const PointSet& points, Backend backend);

// Refreshes dist: each point measured against the line from its segment
// head to the next segment's head (the last segment wraps to element 0).
void compute_distances(HullState& state, Backend backend);

// Per-segment maximum of dist; a segment is splittable iff its max is > 0.
std::vector<primitives::SegmentMax> find_farthest(const HullState& state,
                                                  Backend backend);

// Promotes the farthest point of every splittable segment to a new segment
// head and rebuilds keys/first_pts.
void split_segments(HullState& state,
                    std::span<const primitives::SegmentMax> farthest,
                    Backend backend);

// Recomputes dist under the post-split structure and flags every point that
// is neither a head nor strictly outside its new base line.
void mark_interior(HullState& state, Backend backend);

// Removes flagged-out rows (stable), truncates, and rebuilds first_pts.
// Heads and keys stay valid without recomputation. Returns removed count.
std::size_t compact(HullState& state, Backend backend);

// Full pipeline: degenerate handling, optional preprocess, first split,
// then refine until every remaining point is a hull vertex.
HullResult run(const PointSet& points, Mode mode, Backend backend);

}  // namespace seghull::hull
