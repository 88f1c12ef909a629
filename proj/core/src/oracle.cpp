#include "seghull/oracle.hpp"

#include <algorithm>

#include "seghull/error.hpp"

namespace seghull::oracle {

namespace {

bool lex_less(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Lexicographically sorted points with exact duplicates removed; duplicates
// never change a hull and removing them keeps the outputs free of repeats.
std::vector<Point> sorted_unique(const PointSet& points) {
  std::vector<Point> p;
  p.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) p.push_back(points.point(i));
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

double dist2(Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<Point> monotone_chain(const PointSet& points) {
  if (points.empty()) throw Error(Errc::EmptyInput, "monotone_chain: empty point set");
  const std::vector<Point> p = sorted_unique(points);
  if (p.size() == 1) return p;

  std::vector<Point> hull;
  hull.reserve(2 * p.size());
  for (const Point& q : p) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), q) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(q);
  }
  const std::size_t lower_size = hull.size();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    const Point& q = p[i];
    while (hull.size() > lower_size &&
           cross(hull[hull.size() - 2], hull.back(), q) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(q);
  }
  hull.pop_back();  // closing vertex repeats the start
  return hull;
}

std::vector<Point> gift_wrap(const PointSet& points) {
  if (points.empty()) throw Error(Errc::EmptyInput, "gift_wrap: empty point set");
  if (points.size() > 1000) {
    throw Error(Errc::InputTooLarge, "gift_wrap: capped at 1000 points");
  }
  const std::vector<Point> p = sorted_unique(points);
  const std::size_t m = p.size();
  if (m == 1) return p;

  std::vector<Point> hull;
  std::size_t current = 0;  // lexicographic minimum after sorting
  do {
    hull.push_back(p[current]);
    if (hull.size() > m) {
      throw Error(Errc::InternalError, "gift_wrap: walk failed to close");
    }
    std::size_t next = (current + 1) % m;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == current) continue;
      const double side = cross(p[current], p[next], p[j]);
      if (side < 0.0) {
        next = j;  // j is further clockwise; no point may lie right of the edge
      } else if (side == 0.0 && dist2(p[current], p[j]) > dist2(p[current], p[next])) {
        next = j;  // collinear: take the farthest so mid-edge points are skipped
      }
    }
    current = next;
  } while (current != 0);
  return hull;
}

}  // namespace seghull::oracle
