#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hullkit/hull.hpp"

namespace hullkit {

// O(n log n) monotone-chain hull. Shares the exact predicate and the output
// conventions of the divide-and-conquer algorithms (strict turns, collinear
// vertices dropped, collinear input reduced to its two extremes), so a
// disagreement indicts algorithm logic rather than arithmetic.
// Pass a Stats to have its comparisons counted as orientation tests.
Hull monotone_chain(std::span<const Point> pts, Stats* stats = nullptr);

// All directed pairs (a, b) such that every point is on or to the right of
// a->b, and every point on the line lies within the segment. For 2 <= n <= 64
// only; oracle for bridge and hull tests on small instances.
std::vector<std::pair<Point, Point>> brute_force_hull_edges(
    std::span<const Point> pts);

inline constexpr std::size_t kBruteForceCap = 64;

}  // namespace hullkit
