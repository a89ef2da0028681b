#include "hullkit/reference.hpp"

#include <algorithm>

#include "hullkit/errors.hpp"

namespace hullkit {

Hull monotone_chain(std::span<const Point> pts, Stats* stats) {
    if (pts.empty()) throw empty_input_error("monotone_chain: no points");
    Stats local;
    Stats& st = stats ? *stats : local;

    std::vector<Point> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end(), lex_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    if (sorted.size() == 1) return Hull{{sorted.front()}};

    // Lower chain west->east, upper chain east->west; strict Left turns only,
    // so collinear points never survive.
    auto build = [&](auto first, auto last) {
        std::vector<Point> chain;
        for (auto it = first; it != last; ++it) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), *it, st) !=
                       Orient::Left) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };

    std::vector<Point> lower = build(sorted.begin(), sorted.end());
    std::vector<Point> upper = build(sorted.rbegin(), sorted.rend());

    Hull hull;
    hull.vertices.assign(lower.begin(), lower.end());
    // Chains share both extremes; drop them from the upper half.
    hull.vertices.insert(hull.vertices.end(), upper.begin() + 1, upper.end() - 1);
    return hull;
}

std::vector<std::pair<Point, Point>> brute_force_hull_edges(
    std::span<const Point> pts) {
    if (pts.size() < 2) throw empty_input_error("brute_force_hull_edges: need >= 2 points");
    if (pts.size() > kBruteForceCap)
        throw too_large_error("brute_force_hull_edges: more than 64 points");

    Stats st;
    std::vector<std::pair<Point, Point>> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const Point a = pts[i];
            const Point b = pts[j];
            if (a == b) continue;
            const Frame f{a, b};
            bool edge = true;
            for (const Point& u : pts) {
                const Orient o = orientation(a, b, u, st);
                if (o == Orient::Left) {
                    edge = false;
                    break;
                }
                // Collinear points must stay within the segment, which rules
                // out sub-edges of a fully collinear input.
                if (o == Orient::Collinear &&
                    (along_sign(f, u, a) < 0 || along_sign(f, u, b) > 0)) {
                    edge = false;
                    break;
                }
            }
            if (edge && std::find(edges.begin(), edges.end(),
                                  std::make_pair(a, b)) == edges.end()) {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

}  // namespace hullkit
