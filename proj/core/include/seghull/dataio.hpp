#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "seghull/geometry.hpp"

namespace seghull {

// Structure-of-arrays point container; x and y always have equal length and
// hold only finite values once a set has passed ingestion.
struct PointSet {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }
  Point point(std::size_t i) const { return {x[i], y[i]}; }

  void reserve(std::size_t n) {
    x.reserve(n);
    y.reserve(n);
  }
  void push_back(Point p) {
    x.push_back(p.x);
    y.push_back(p.y);
  }
};

// SplitMix64: the fixed generator behind every dataset in this project, so
// any run is reproducible from (n, seed) alone.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Doubles in [0,1) are (word >> 11) * 2^-53. Draw order is one stream per
// dataset: gen_uniform draws x then y for point 0, then point 1, ...;
// gen_circle draws one angle per point in point order.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

// n i.i.d. points uniform on [0,1) x [0,1).
PointSet gen_uniform(std::size_t n, std::uint64_t seed);

// n points on the unit circle at uniform random angles (every point is a
// hull vertex with overwhelming probability).
PointSet gen_circle(std::size_t n, std::uint64_t seed);

enum class PointFormat { Text, Binary };

// Text: one "x y" pair per line, '#' lines and blank lines skipped, printed
// with 17 significant digits so a write/read round trip is exact.
// Binary: magic "PTS2", little-endian u64 count, then count (x, y) pairs of
// little-endian IEEE-754 doubles; round trips are bit-exact.
PointSet read_points(const std::filesystem::path& path, PointFormat format);
void write_points(const PointSet& points, const std::filesystem::path& path,
                  PointFormat format);

// Vertices of an ASCII OBJ ("v x y z" lines) or ASCII PLY mesh, projected to
// the XY plane (z dropped). Vertex order is preserved; faces, normals and
// unknown elements are skipped. Binary PLY is rejected.
PointSet read_mesh_vertices(const std::filesystem::path& path);

}  // namespace seghull
