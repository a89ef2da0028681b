#include "hullkit/hull.hpp"

#include <algorithm>
#include <sstream>

namespace hullkit {

namespace {

std::string describe(Point p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.x << ", " << p.y << ")";
    return os.str();
}

}  // namespace

bool cyclic_equal(const Hull& a, const Hull& b) {
    const auto& va = a.vertices;
    const auto& vb = b.vertices;
    if (va.size() != vb.size()) return false;
    if (va.empty()) return true;
    // vertices are distinct, so at most one rotation can line up
    const auto at = std::find(vb.begin(), vb.end(), va.front());
    if (at == vb.end()) return false;
    const std::size_t shift = static_cast<std::size_t>(at - vb.begin());
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (!(va[i] == vb[(i + shift) % vb.size()])) return false;
    }
    return true;
}

std::optional<std::string> hull_violation(const Hull& hull,
                                          std::span<const Point> input) {
    const auto& v = hull.vertices;
    if (input.empty()) return "empty input cannot have a hull";
    if (v.empty()) return "hull has no vertices";

    Stats scratch;  // checker-local; callers' counters stay untouched

    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                return "duplicate vertex " + describe(v[i]);
        }
    }
    for (const Point& p : v) {
        if (std::find(input.begin(), input.end(), p) == input.end())
            return "vertex " + describe(p) + " is not an input point";
    }
    for (const Point& p : v) {
        if (lex_less(p, v.front()))
            return "first vertex is not the lexicographic minimum";
    }
    if (v.size() >= 3) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point a = v[i];
            const Point b = v[(i + 1) % v.size()];
            const Point c = v[(i + 2) % v.size()];
            if (orientation(a, b, c, scratch) != Orient::Left)
                return "non-left turn at vertex " + describe(b);
        }
        for (const Point& u : input) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const Point a = v[i];
                const Point b = v[(i + 1) % v.size()];
                if (orientation(a, b, u, scratch) == Orient::Right)
                    return "input point " + describe(u) + " lies outside";
            }
        }
    } else if (v.size() == 2) {
        // Degenerate collinear input: both extremes, everything on the segment.
        const Frame f{v[0], v[1]};
        for (const Point& u : input) {
            if (orientation(v[0], v[1], u, scratch) != Orient::Collinear)
                return "input point " + describe(u) + " off the segment";
            if (along_sign(f, u, v[0]) < 0 || along_sign(f, u, v[1]) > 0)
                return "input point " + describe(u) + " beyond the segment";
        }
    } else {
        for (const Point& u : input) {
            if (!(u == v[0]))
                return "single-vertex hull but distinct input point exists";
        }
    }
    return std::nullopt;
}

}  // namespace hullkit
