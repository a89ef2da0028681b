#include "hullkit/quickhull_rs.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

struct RsTask {
    Frame frame;
    std::vector<Point> pts;
    std::uint64_t depth = 0;
    std::uint64_t call_id = 0;
    Point emit;
    bool is_emit = false;
};

std::vector<Point> solve_side(const Frame& base, std::vector<Point> pts,
                              std::uint64_t seed, std::uint64_t root_id,
                              bool shuffle_rayshoot, Stats& stats,
                              const RsObserver& observer) {
    std::vector<Point> chain;
    if (pts.empty()) return chain;

    std::vector<RsTask> stack;
    stack.push_back({base, std::move(pts), 1, root_id, {}, false});
    while (!stack.empty()) {
        RsTask task = std::move(stack.back());
        stack.pop_back();
        if (task.is_emit) {
            chain.push_back(task.emit);
            continue;
        }

        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, task.depth);

        Rng rng(Rng::mix(seed, task.call_id));
        std::vector<Point>& pts_here = task.pts;
        const std::size_t pivot_idx =
            static_cast<std::size_t>(rng.bounded(pts_here.size()));
        std::swap(pts_here[pivot_idx], pts_here.back());
        const Point q = pts_here.back();

        // The base endpoints compete as bridge candidates: the hull edge
        // crossed by the ray may be incident to one of them, in which case
        // the corresponding subproblem comes out empty.
        std::vector<Point> candidates(pts_here.begin(), pts_here.end() - 1);
        candidates.push_back(task.frame.p);
        candidates.push_back(task.frame.r);

        const Bridge bridge =
            ray_shoot(task.frame, candidates, q, shuffle_rayshoot, rng, stats);
        if (observer) observer({task.frame, q, bridge, pts_here});

        std::vector<Point> left, right;
        for (const Point& u : pts_here) {
            if (above_line(task.frame.p, bridge.s, u, stats)) {
                left.push_back(u);
            } else if (above_line(bridge.t, task.frame.r, u, stats)) {
                right.push_back(u);
            }
        }
        // Bridge endpoints that coincide with the base endpoints belong to
        // the enclosing call and are emitted there.
        const bool emit_s =
            bridge.s != task.frame.p && bridge.s != task.frame.r;
        const bool emit_t = !bridge.degenerate() &&
                            bridge.t != task.frame.p &&
                            bridge.t != task.frame.r;
        stats.points_pruned += pts_here.size() - left.size() - right.size() -
                               (emit_s ? 1 : 0) - (emit_t ? 1 : 0);

        if (!right.empty())
            stack.push_back({{bridge.t, task.frame.r}, std::move(right),
                             task.depth + 1, Rng::mix(task.call_id, 2), {},
                             false});
        if (emit_t) stack.push_back({{}, {}, 0, 0, bridge.t, true});
        if (emit_s) stack.push_back({{}, {}, 0, 0, bridge.s, true});
        if (!left.empty())
            stack.push_back({{task.frame.p, bridge.s}, std::move(left),
                             task.depth + 1, Rng::mix(task.call_id, 1), {},
                             false});
    }
    return chain;
}

}  // namespace

Hull rs_quickhull(std::span<const Point> S, std::uint64_t seed,
                  bool shuffle_rayshoot, Stats& stats,
                  const RsObserver& observer) {
    if (S.empty()) throw empty_input_error("rs_quickhull: no points");

    Point p = S.front(), r = S.front();
    for (const Point& u : S) {
        if (lex_less(u, p)) p = u;
        if (lex_less(r, u)) r = u;
    }
    if (p == r) {
        stats.points_pruned += S.size() - 1;
        return Hull{{p}};
    }

    std::vector<Point> north, south;
    std::size_t on_chord = 0;
    for (const Point& u : S) {
        switch (orientation(p, r, u, stats)) {
            case Orient::Left: north.push_back(u); break;
            case Orient::Right: south.push_back(u); break;
            case Orient::Collinear: ++on_chord; break;
        }
    }
    stats.points_pruned += on_chord - 2;

    std::vector<Point> north_chain =
        solve_side({p, r}, std::move(north), seed, Rng::mix(0, 1),
                   shuffle_rayshoot, stats, observer);
    std::vector<Point> south_chain =
        solve_side({r, p}, std::move(south), seed, Rng::mix(0, 2),
                   shuffle_rayshoot, stats, observer);

    Hull hull;
    hull.vertices.reserve(north_chain.size() + south_chain.size() + 2);
    hull.vertices.push_back(p);
    hull.vertices.insert(hull.vertices.end(), south_chain.rbegin(),
                         south_chain.rend());
    hull.vertices.push_back(r);
    hull.vertices.insert(hull.vertices.end(), north_chain.rbegin(),
                         north_chain.rend());
    return hull;
}

}  // namespace hullkit
