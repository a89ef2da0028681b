#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullkit/geometry.hpp"

namespace hullkit {

// Distinct extreme points in counter-clockwise order, starting at the
// lexicographically smallest vertex. Collinear boundary points are dropped.
struct Hull {
    std::vector<Point> vertices;

    friend bool operator==(const Hull&, const Hull&) = default;
};

// Equality as cyclic sequences (same orientation). All algorithms here start
// at the lexicographic minimum, so this only forgives a different rotation.
bool cyclic_equal(const Hull& a, const Hull& b);

// Checks the output contract of a hull against the input it came from:
// strict left turns on every consecutive triple, every input point inside or
// on the boundary, vertices pairwise distinct and members of the input,
// first vertex lexicographically smallest. Returns a description of the
// first violation found, or nullopt if the hull is sound.
std::optional<std::string> hull_violation(const Hull& hull,
                                          std::span<const Point> input);

}  // namespace hullkit
