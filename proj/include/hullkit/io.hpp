#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hullkit/geometry.hpp"

namespace hullkit {

// Point list text format: one point per line as "x y" with shortest
// round-trip decimals; blank lines and lines starting with '#' are ignored.

// Throws parse_error (with the 1-based line number) on malformed lines and
// on non-finite coordinates.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

void write_points(std::span<const Point> pts, std::ostream& out);
void write_points_file(std::span<const Point> pts, const std::string& path);

// Shortest decimal that round-trips the exact binary64 value.
std::string format_double(double v);

}  // namespace hullkit
