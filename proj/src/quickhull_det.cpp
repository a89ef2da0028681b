#include "hullkit/quickhull_det.hpp"

#include <algorithm>

#include "hullkit/errors.hpp"

namespace hullkit {

Point farthest_point(const Frame& f, std::span<const Point> S, Stats& stats) {
    if (S.empty()) throw empty_input_error("farthest_point: no points");
    Point best = S.front();
    for (const Point& u : S) {
        const Orient o = side_of_parallel(f, best, u, stats);
        if (o == Orient::Left) {
            best = u;
        } else if (o == Orient::Collinear && lex_less(u, best)) {
            best = u;
        }
    }
    return best;
}

namespace {

struct DetTask {
    Frame frame;
    std::vector<Point> pts;
    std::uint64_t depth = 0;
    Point emit;
    bool is_emit = false;
};

// Solves one side of the initial chord. Returns the chain of hull vertices
// strictly between frame.p and frame.r, ordered from the p side to the r
// side (in-order traversal of the recursion tree).
std::vector<Point> solve_side(const Frame& base, std::vector<Point> pts,
                              Stats& stats,
                              std::vector<DetCallRecord>* call_log) {
    std::vector<Point> chain;
    if (pts.empty()) return chain;

    std::vector<DetTask> stack;
    stack.push_back({base, std::move(pts), 1, {}, false});
    while (!stack.empty()) {
        DetTask task = std::move(stack.back());
        stack.pop_back();
        if (task.is_emit) {
            chain.push_back(task.emit);
            continue;
        }

        ++stats.recursive_calls;
        stats.max_depth = std::max(stats.max_depth, task.depth);

        const Point q = farthest_point(task.frame, task.pts, stats);
        if (call_log) call_log->push_back({task.frame, q, task.pts.size()});

        std::vector<Point> left, right;
        for (const Point& u : task.pts) {
            if (above_line(task.frame.p, q, u, stats)) {
                left.push_back(u);
            } else if (above_line(q, task.frame.r, u, stats)) {
                right.push_back(u);
            }
        }
        stats.points_pruned +=
            task.pts.size() - 1 - left.size() - right.size();

        // Right child below the emit so the pop order is left, q, right.
        if (!right.empty())
            stack.push_back({{q, task.frame.r}, std::move(right),
                             task.depth + 1, {}, false});
        stack.push_back({{}, {}, 0, q, true});
        if (!left.empty())
            stack.push_back({{task.frame.p, q}, std::move(left),
                             task.depth + 1, {}, false});
    }
    return chain;
}

}  // namespace

Hull quickhull(std::span<const Point> S, Stats& stats,
               std::vector<DetCallRecord>* call_log) {
    if (S.empty()) throw empty_input_error("quickhull: no points");

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
    stats.points_pruned += on_chord - 2;  // p and r stay as vertices

    std::vector<Point> north_chain =
        solve_side({p, r}, std::move(north), stats, call_log);
    std::vector<Point> south_chain =
        solve_side({r, p}, std::move(south), stats, call_log);

    // Counter-clockwise from the lexicographic minimum: the south chain runs
    // west to east, the north chain east to west; both solves emit in frame
    // order, which is the opposite.
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
