#pragma once

#include <span>

#include "hullkit/geometry.hpp"
#include "hullkit/rng.hpp"

namespace hullkit {

// Hull edge crossed by the ray from the pivot, possibly degenerate
// (s == t == pivot, a zero-length segment parallel to the base).
struct Bridge {
    Point s;
    Point t;

    bool degenerate() const { return s == t; }
    friend bool operator==(const Bridge&, const Bridge&) = default;
};

enum class ScanSide { LeftOfPivot, RightOfPivot };

// Linear scan for the tangent point: returns the member t' of side_set such
// that no member is strictly above the line through anchor and t' (directed
// consistently with the frame). Exactly one orientation test per member.
// Collinear ties keep the point farther from the anchor along the candidate
// line, so bridges are maximal and collinear points stay off the hull.
Point tangent_scan(Point anchor, std::span<const Point> side_set,
                   ScanSide side, const Frame& f, Stats& stats);

// Finds the edge of the upper hull of S + {q} intersected by the ray from q
// normal to the base, by randomized incremental insertion. Points of S must
// lie on or left of f.p -> f.r (the base endpoints themselves are legal
// candidates); the pivot q must be strictly left. With shuffle off the input
// order is used as-is.
Bridge ray_shoot(const Frame& f, std::span<const Point> S, Point q,
                 bool shuffle, Rng& rng, Stats& stats);

}  // namespace hullkit
