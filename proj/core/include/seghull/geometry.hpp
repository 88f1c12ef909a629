#pragma once

#include <cstddef>
#include <span>

namespace seghull {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

// Twice the signed area of triangle (a, b, c): positive iff c lies strictly
// to the left of the directed line a -> b, zero iff collinear.
constexpr double cross(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Signed outward measure of p against the directed line first -> last:
// positive iff p lies strictly to the right. Within one fixed line this is
// proportional to the Euclidean distance, which is all the pipeline needs;
// it is used for comparisons only and never reported as a metric distance.
constexpr double outward_distance(Point first, Point last, Point p) {
  return -cross(first, last, p);
}

// Strict interior test against a convex polygon of 3..4 corners in CCW
// order. Duplicate corners are allowed (degenerate quadrilaterals); with
// fewer than 3 distinct corners nothing is inside. Boundary points are not
// inside.
inline bool strictly_inside_convex(std::span<const Point> corners, Point p) {
  const std::size_t n = corners.size();
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (corners[i] == corners[j]) {
        seen = true;
        break;
      }
    }
    if (!seen) ++distinct;
  }
  if (distinct < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = corners[i];
    const Point b = corners[(i + 1) % n];
    if (a == b) continue;
    if (cross(a, b, p) <= 0.0) return false;
  }
  return true;
}

}  // namespace seghull
