#include "hullkit/ray_shoot.hpp"

#include <vector>

#include "hullkit/errors.hpp"

namespace hullkit {

Point tangent_scan(Point anchor, std::span<const Point> side_set,
                   ScanSide side, [[maybe_unused]] const Frame& f,
                   Stats& stats) {
    if (side_set.empty())
        throw empty_input_error("tangent_scan: side set is empty");
    Point best = side_set.front();
    for (const Point& u : side_set) {
        const Orient o = side == ScanSide::RightOfPivot
                             ? orientation(anchor, best, u, stats)
                             : orientation(best, anchor, u, stats);
        if (o == Orient::Left) {
            best = u;
        } else if (o == Orient::Collinear) {
            // Tie on the candidate line: keep the point farther from the
            // anchor along that line, so the eventual bridge is maximal.
            if (dot_sign(u, best, best, anchor) > 0) best = u;
        }
    }
    return best;
}

Bridge ray_shoot(const Frame& f, std::span<const Point> S, Point q,
                 bool shuffle, Rng& rng, Stats& stats) {
    ++stats.ray_shoot_calls;

    Bridge bridge{q, q};
    // Processed points on each side of the ray; a point exactly on the ray
    // belongs to both (closed halfplanes). The pivot seeds both sides.
    std::vector<Point> left_set{q};
    std::vector<Point> right_set{q};
    left_set.reserve(S.size() / 2 + 1);
    right_set.reserve(S.size() / 2 + 1);

    std::vector<Point> permuted;
    std::span<const Point> order = S;
    if (shuffle && S.size() > 1) {
        permuted.assign(S.begin(), S.end());
        hullkit::shuffle(permuted, rng);
        order = permuted;
    }

    for (const Point& pi : order) {
        const Orient o = bridge.degenerate()
                             ? side_of_parallel(f, bridge.s, pi, stats)
                             : orientation(bridge.s, bridge.t, pi, stats);
        const int side = along_sign(f, pi, q);
        if (o == Orient::Left) {
            if (side <= 0) {
                bridge = {pi, tangent_scan(pi, right_set,
                                           ScanSide::RightOfPivot, f, stats)};
            } else {
                bridge = {tangent_scan(pi, left_set, ScanSide::LeftOfPivot, f,
                                       stats),
                          pi};
            }
        } else if (o == Orient::Collinear) {
            // A point exactly on the bridge line extends the bridge to the
            // maximal collinear run, so no interior run point can end up as
            // an endpoint no matter the processing order. Runs are ordered
            // along the line itself, which also covers bridges perpendicular
            // to the base.
            if (bridge.degenerate()) {
                if (along_sign(f, pi, bridge.s) < 0) {
                    bridge.s = pi;
                } else if (along_sign(f, pi, bridge.t) > 0) {
                    bridge.t = pi;
                }
            } else if (dot_sign(pi, bridge.s, bridge.t, bridge.s) < 0) {
                bridge.s = pi;
            } else if (dot_sign(pi, bridge.t, bridge.t, bridge.s) > 0) {
                bridge.t = pi;
            }
        }
        if (side <= 0) left_set.push_back(pi);
        if (side >= 0) right_set.push_back(pi);
    }
    return bridge;
}

}  // namespace hullkit
