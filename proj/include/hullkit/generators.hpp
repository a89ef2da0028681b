#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hullkit/geometry.hpp"

namespace hullkit {

enum class DistKind { Square, Circle, OnCircle, Quad, Worst, Adversarial };

struct Distribution {
    DistKind kind = DistKind::Square;
    // Hull size target; Adversarial only.
    std::size_t h = 0;
};

// Exponent cap for the exponentially separated constructions: coordinates up
// to 2^600 keep every fast-path determinant intermediate below 2^1023.
inline constexpr std::size_t kWorstCap = 300;

// "square"... "adversarial_h<k>" for CSV and logs.
std::string distribution_name(const Distribution& d);

// Exactly n points, identical for identical (d, n, seed).
//   Square       uniform in [0,1]^2
//   Circle       uniform in the unit disk (rejection from the square)
//   OnCircle     uniform angle on the unit circle
//   Quad         (x, x^2), x uniform in [0,1]
//   Worst        {(2^i, 2^2i) : i = 1..n}, shuffled; n <= 300
//   Adversarial  {(0,0)} + {(2^i, 2^2i) : i = 1..h-1} + (n-h) points strictly
//                inside the triangle ((0,0),(1,1),(2,4)), shuffled; 3 <= h <= min(n, 300)
std::vector<Point> generate(const Distribution& d, std::size_t n,
                            std::uint64_t seed);

}  // namespace hullkit
