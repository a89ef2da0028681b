#pragma once

#include <cmath>
#include <cstdint>

namespace hullkit {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Total order: x first, then y. Matches the extreme-point selection rule.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Orient { Left, Right, Collinear };

// Monotone counters owned by a single algorithm run.
struct Stats {
    std::uint64_t orientation_tests = 0;
    std::uint64_t ray_shoot_calls = 0;
    std::uint64_t recursive_calls = 0;
    std::uint64_t points_pruned = 0;
    std::uint64_t max_depth = 0;

    void merge(const Stats& o) {
        orientation_tests += o.orientation_tests;
        ray_shoot_calls += o.ray_shoot_calls;
        recursive_calls += o.recursive_calls;
        points_pruned += o.points_pruned;
        if (o.max_depth > max_depth) max_depth = o.max_depth;
    }
};

// Directed base segment p->r of a subproblem. The subproblem's points lie
// strictly to the left of p->r; "up" means left of the base direction.
struct Frame {
    Point p;
    Point r;
};

namespace detail {

// Exact sign of (e1-f1)*(g1-h1) - (e2-f2)*(g2-h2), arbitrary-precision path.
int det2_sign_exact(double e1, double f1, double g1, double h1,
                    double e2, double f2, double g2, double h2);

// Forward-error coefficient for the fast path. Same bound as the classic
// stage-A orientation filter: the expression shape is two rounded
// differences per term, one rounded product each, one rounded subtraction.
inline constexpr double kFilterCoef = (3.0 + 16.0 * 0x1p-53) * 0x1p-53;

// Below this term-magnitude sum the products may have denormalized and the
// relative-error model no longer applies; fall through to the exact path.
inline constexpr double kFilterMinSum = 1e-280;

// Sign of (e1-f1)*(g1-h1) - (e2-f2)*(g2-h2) over exact real arithmetic.
// Fast filtered evaluation; exact fallback whenever the filter cannot
// certify the sign (cancellation, underflow, overflow to infinity).
inline int det2_sign(double e1, double f1, double g1, double h1,
                     double e2, double f2, double g2, double h2) {
    const double d1a = e1 - f1, d1b = g1 - h1;
    const double d2a = e2 - f2, d2b = g2 - h2;
    // A rounded difference is zero iff the operands are equal, so a zero
    // factor makes the whole term exactly zero.
    if ((d1a == 0.0 || d1b == 0.0) && (d2a == 0.0 || d2b == 0.0)) return 0;

    const double t1 = d1a * d1b;
    const double t2 = d2a * d2b;
    // Rounding never flips the sign of a difference, and a product that
    // rounds to a strict sign has that true sign. Opposite (or zero)
    // signs of the two terms therefore decide immediately, even when one
    // of them overflowed or underflowed.
    if (t1 > 0.0) {
        if (t2 <= 0.0) return 1;
    } else if (t1 < 0.0) {
        if (t2 >= 0.0) return -1;
    } else {
        if (t2 > 0.0) return -1;
        if (t2 < 0.0) return 1;
        return det2_sign_exact(e1, f1, g1, h1, e2, f2, g2, h2);
    }

    const double det = t1 - t2;
    const double detsum = std::abs(t1) + std::abs(t2);
    if (std::isfinite(detsum) && detsum >= kFilterMinSum &&
        std::abs(det) >= kFilterCoef * detsum) {
        return det > 0.0 ? 1 : -1;
    }
    return det2_sign_exact(e1, f1, g1, h1, e2, f2, g2, h2);
}

inline Orient orient_of_sign(int s) {
    return s > 0 ? Orient::Left : (s < 0 ? Orient::Right : Orient::Collinear);
}

}  // namespace detail

// Exact sign of the 2x2 determinant of (b-a, c-a). One orientation test.
inline Orient orientation(Point a, Point b, Point c, Stats& stats) {
    ++stats.orientation_tests;
    // Coincident arguments make the determinant exactly zero; skip the
    // kernel so duplicate-heavy inputs stay on the fast path.
    if (a == b || b == c || a == c) return Orient::Collinear;
    return detail::orient_of_sign(
        detail::det2_sign(b.x, a.x, c.y, a.y, b.y, a.y, c.x, a.x));
}

// Scalar projection (u-p).(r-p) of u onto the base direction. Plain double;
// exact comparisons against a pivot go through along_sign below.
inline double along(const Frame& f, Point u) {
    return (u.x - f.p.x) * (f.r.x - f.p.x) + (u.y - f.p.y) * (f.r.y - f.p.y);
}

// Exact sign of (a-b).(c-d). Not an orientation test.
inline int dot_sign(Point a, Point b, Point c, Point d) {
    return detail::det2_sign(a.x, b.x, c.x, d.x, b.y, a.y, c.y, d.y);
}

// Exact sign of (u-q).(r-p): whether u projects before (-1), onto (0), or
// beyond (+1) the pivot q along the base direction. Not an orientation test.
inline int along_sign(const Frame& f, Point u, Point q) {
    return dot_sign(u, q, f.r, f.p);
}

// Side of u relative to the directed line through `through` parallel to the
// base direction r-p, without materializing a second line point. One
// orientation test.
inline Orient side_of_parallel(const Frame& f, Point through, Point u,
                               Stats& stats) {
    ++stats.orientation_tests;
    return detail::orient_of_sign(
        detail::det2_sign(f.r.x, f.p.x, u.y, through.y, f.r.y, f.p.y, u.x,
                          through.x));
}

// True iff u is strictly left of the directed line a->b. One orientation test.
inline bool above_line(Point a, Point b, Point u, Stats& stats) {
    return orientation(a, b, u, stats) == Orient::Left;
}

// True iff u is strictly left of the directed line through q with the base
// direction; the degenerate bridge case. One orientation test.
inline bool above_degenerate(const Frame& f, Point q, Point u, Stats& stats) {
    return side_of_parallel(f, q, u, stats) == Orient::Left;
}

}  // namespace hullkit
