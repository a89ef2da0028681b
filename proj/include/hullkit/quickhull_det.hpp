#pragma once

#include <span>
#include <vector>

#include "hullkit/hull.hpp"

namespace hullkit {

// One divide-and-conquer call: its base segment, the farthest point it
// selected, and how many points it worked on. Logged in traversal order.
struct DetCallRecord {
    Frame frame;
    Point farthest;
    std::size_t subset_size;
};

// Point of S maximizing the doubled signed area of (f.p, f.r, .); ties go to
// the lexicographically smaller point. One area-sign-and-compare evaluation
// per point, each counted as one orientation test. S must be non-empty and
// strictly left of the base.
Point farthest_point(const Frame& f, std::span<const Point> S, Stats& stats);

// Deterministic divide-and-conquer hull: split on the farthest point, prune
// the triangle interior, recurse on both flanks. Recursion runs on an
// explicit work stack so exponentially thin inputs cannot exhaust the call
// stack. Duplicates are allowed; collinear points never reach the output.
Hull quickhull(std::span<const Point> S, Stats& stats,
               std::vector<DetCallRecord>* call_log = nullptr);

}  // namespace hullkit
