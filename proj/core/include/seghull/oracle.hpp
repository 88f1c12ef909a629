#pragma once

#include <vector>

#include "seghull/dataio.hpp"
#include "seghull/geometry.hpp"

namespace seghull::oracle {

// Independent sequential references used to verify the pipeline; they share
// no code with the hull module beyond the scalar cross product. Both return
// the hull CCW from the leftmost vertex (ties: lowest y) with collinear
// boundary points excluded, matching the pipeline's output contract exactly.

// Sort-and-scan hull construction, O(n log n).
std::vector<Point> monotone_chain(const PointSet& points);

// Boundary walk, O(n*h); capped at n <= 1000 (Errc::InputTooLarge beyond).
std::vector<Point> gift_wrap(const PointSet& points);

}  // namespace seghull::oracle
