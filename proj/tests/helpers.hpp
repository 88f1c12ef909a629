#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seghull/dataio.hpp"
#include "seghull/error.hpp"
#include "seghull/geometry.hpp"
#include "seghull/hull.hpp"
#include "seghull/primitives.hpp"

namespace testing {

using seghull::Errc;
using seghull::Error;
using seghull::Point;
using seghull::PointSet;

template <class Fn>
std::optional<Errc> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline PointSet make_points(std::initializer_list<Point> pts) {
  PointSet set;
  set.reserve(pts.size());
  for (const Point& p : pts) set.push_back(p);
  return set;
}

inline std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("seghull_test_" + name);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(temp_file(name)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

// --- hull output properties -------------------------------------------------

inline bool strictly_convex_ccw(const std::vector<Point>& hull) {
  if (hull.size() < 3) return true;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seghull::cross(hull[i], hull[(i + 1) % n], hull[(i + 2) % n]) <= 0.0) {
      return false;
    }
  }
  return true;
}

inline bool contains_all(const std::vector<Point>& hull, const PointSet& points) {
  if (hull.size() < 3) return true;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point p = points.point(i);
    for (std::size_t e = 0; e < n; ++e) {
      if (seghull::cross(hull[e], hull[(e + 1) % n], p) < 0.0) return false;
    }
  }
  return true;
}

// every hull vertex is an input point, coordinates bit for bit
inline bool conserves_inputs(const std::vector<Point>& hull, const PointSet& points) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    seen.insert({std::bit_cast<std::uint64_t>(points.x[i]),
                 std::bit_cast<std::uint64_t>(points.y[i])});
  }
  for (const Point& v : hull) {
    if (!seen.count({std::bit_cast<std::uint64_t>(v.x),
                     std::bit_cast<std::uint64_t>(v.y)})) {
      return false;
    }
  }
  return true;
}

inline bool no_repeated_vertex(const std::vector<Point>& hull) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      if (hull[i] == hull[j]) return false;
    }
  }
  return true;
}

// --- pipeline state invariants ----------------------------------------------

inline bool valid_hull_state(const seghull::hull::HullState& s,
                             std::string* why = nullptr) {
  auto fail = [&](const char* reason) {
    if (why) *why = reason;
    return false;
  };
  const std::size_t n = s.size();
  if (s.y.size() != n || s.dist.size() != n || s.head.size() != n ||
      s.keys.size() != n || s.first_pts.size() != n || s.flag.size() != n) {
    return fail("column lengths differ");
  }
  if (n == 0) return true;
  if (!seghull::primitives::valid_head_flags(s.head)) return fail("bad head flags");
  if (!seghull::primitives::valid_keys(s.keys)) return fail("bad keys");
  if (s.keys != seghull::primitives::keys_from_heads(s.head, seghull::Backend::Sequential)) {
    return fail("keys do not match heads");
  }
  if (s.first_pts !=
      seghull::primitives::propagate_first_index(s.head, seghull::Backend::Sequential)) {
    return fail("first_pts do not match heads");
  }
  // each segment stays sorted by x one way or the other (ties by y)
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || s.head[i]) {
      bool ascending = true, descending = true;
      for (std::size_t j = start + 1; j < i; ++j) {
        const Point a = s.point(j - 1), b = s.point(j);
        const bool less = a.x != b.x ? a.x < b.x : a.y < b.y;
        const bool greater = a.x != b.x ? a.x > b.x : a.y > b.y;
        if (less) descending = false;
        if (greater) ascending = false;
      }
      if (!ascending && !descending) return fail("segment not monotone in x");
      start = i;
    }
  }
  return true;
}

// --- polygon simplicity (brute force) -----------------------------------------

inline bool proper_intersect(Point a, Point b, Point c, Point d) {
  const double d1 = seghull::cross(a, b, c);
  const double d2 = seghull::cross(a, b, d);
  const double d3 = seghull::cross(c, d, a);
  const double d4 = seghull::cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && (d1 != 0) && (d2 != 0) && ((d3 > 0) != (d4 > 0)) &&
         (d3 != 0) && (d4 != 0);
}

inline bool simple_polygon(const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;  // adjacent
      if (proper_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace testing
