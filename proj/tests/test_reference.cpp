#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hullkit/errors.hpp"
#include "hullkit/generators.hpp"
#include "hullkit/reference.hpp"
#include "hullkit/rng.hpp"

using namespace hullkit;

namespace {

// Hull boundary edges reversed to the brute-force convention (points on or
// right of each directed edge).
std::vector<std::pair<Point, Point>> boundary_edges(const Hull& h) {
    std::vector<std::pair<Point, Point>> edges;
    const auto& v = h.vertices;
    if (v.size() == 2) {
        edges.emplace_back(v[0], v[1]);
        edges.emplace_back(v[1], v[0]);
        return edges;
    }
    if (v.size() < 3) return edges;
    for (std::size_t i = 0; i < v.size(); ++i)
        edges.emplace_back(v[(i + 1) % v.size()], v[i]);
    return edges;
}

bool same_edge_set(std::vector<std::pair<Point, Point>> a,
                   std::vector<std::pair<Point, Point>> b) {
    if (a.size() != b.size()) return false;
    for (const auto& e : a)
        if (std::find(b.begin(), b.end(), e) == b.end()) return false;
    return true;
}

}  // namespace

TEST_CASE("monotone chain on square plus center") {
    const std::vector<Point> pts = {
        {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    const Hull h = monotone_chain(pts);
    const std::vector<Point> want = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(h.vertices == want);
    CHECK_FALSE(hull_violation(h, pts).has_value());
}

TEST_CASE("monotone chain reduces collinear input to its extremes") {
    const std::vector<Point> pts = {{4, 4}, {1, 1}, {3, 3}, {0, 0}, {2, 2}};
    const Hull h = monotone_chain(pts);
    const std::vector<Point> want = {{0, 0}, {4, 4}};
    CHECK(h.vertices == want);
}

TEST_CASE("monotone chain keeps every parabola construction point") {
    // the exponentially separated points are in convex position
    std::vector<Point> pts;
    pts.push_back({0, 0});
    for (int i = 1; i < 50; ++i)
        pts.push_back({std::ldexp(1.0, i), std::ldexp(1.0, 2 * i)});
    Rng rng(5);
    shuffle(pts, rng);
    const Hull h = monotone_chain(pts);
    CHECK(h.vertices.size() == 50);
}

TEST_CASE("adversarial hull contains all construction points") {
    // The interior fill sits inside the stated triangle, which pokes below
    // the hull of the parabola chain, so extra fill vertices appear on the
    // lower left; the construction points themselves always survive.
    const auto pts = generate({DistKind::Adversarial, 50}, 500, 9);
    const Hull h = monotone_chain(pts);
    CHECK(h.vertices.size() >= 50);
    std::size_t found = 0;
    for (const Point& v : h.vertices) {
        if (v == Point{0, 0}) ++found;
        for (int i = 1; i < 50; ++i)
            if (v == Point{std::ldexp(1.0, i), std::ldexp(1.0, 2 * i)}) ++found;
    }
    CHECK(found == 50);
}

TEST_CASE("monotone chain degenerate sizes") {
    CHECK(monotone_chain(std::vector<Point>{{2, 3}}).vertices ==
          std::vector<Point>{{2, 3}});
    const std::vector<Point> dup = {{1, 1}, {1, 1}, {1, 1}};
    CHECK(monotone_chain(dup).vertices == std::vector<Point>{{1, 1}});
    CHECK_THROWS_AS(monotone_chain({}), empty_input_error);
}

TEST_CASE("brute force edges of a triangle") {
    const std::vector<Point> pts = {{0, 0}, {2, 0}, {1, 1}};
    const auto edges = brute_force_hull_edges(pts);
    CHECK(edges.size() == 3);
}

TEST_CASE("brute force edges of a collinear set") {
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {2, 0}};
    const auto edges = brute_force_hull_edges(pts);
    REQUIRE(edges.size() == 2);
    CHECK(same_edge_set(edges, {{{0, 0}, {2, 0}}, {{2, 0}, {0, 0}}}));
}

TEST_CASE("brute force guards") {
    CHECK_THROWS_AS(brute_force_hull_edges(std::vector<Point>{{1, 1}}),
                    empty_input_error);
    std::vector<Point> big(65);
    for (std::size_t i = 0; i < big.size(); ++i)
        big[i] = {static_cast<double>(i), static_cast<double>(i * i)};
    CHECK_THROWS_AS(brute_force_hull_edges(big), too_large_error);
}

TEST_CASE("cross-oracle agreement on random and structured instances") {
    Rng rng(21);
    const std::vector<Distribution> dists = {
        {DistKind::Square, 0}, {DistKind::Circle, 0}, {DistKind::OnCircle, 0},
        {DistKind::Quad, 0},   {DistKind::Worst, 0},
    };
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 2 + rng.bounded(kBruteForceCap - 1);
        const Distribution d = dists[rng.bounded(dists.size())];
        const auto pts = generate(d, n, rng.next_u64());
        const Hull h = monotone_chain(pts);
        CHECK(same_edge_set(brute_force_hull_edges(pts), boundary_edges(h)));
    }
    // duplicate/collinear-heavy grid instances
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Point> pts;
        const std::size_t n = 2 + rng.bounded(30);
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back({static_cast<double>(rng.bounded(4)),
                           static_cast<double>(rng.bounded(4))});
        const Hull h = monotone_chain(pts);
        if (h.vertices.size() == 1) continue;  // all points equal: no edges
        CHECK(same_edge_set(brute_force_hull_edges(pts), boundary_edges(h)));
    }
}
