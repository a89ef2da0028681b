#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hullkit/errors.hpp"
#include "hullkit/generators.hpp"
#include "hullkit/quickhull_det.hpp"
#include "hullkit/reference.hpp"
#include "hullkit/rng.hpp"

using namespace hullkit;

namespace {

Point pw(int i) { return {std::ldexp(1.0, i), std::ldexp(1.0, 2 * i)}; }

}  // namespace

TEST_CASE("farthest point maximizes distance from the base") {
    Stats st;
    const std::vector<Point> s1 = {{1, 1}, {1, 2}};
    CHECK(farthest_point({{0, 0}, {2, 0}}, s1, st) == Point{1, 2});
    CHECK(st.orientation_tests == 2);  // one evaluation per point
}

TEST_CASE("farthest point ties break lexicographically") {
    Stats st;
    const std::vector<Point> s = {{3, 1}, {1, 1}};
    CHECK(farthest_point({{0, 0}, {4, 0}}, s, st) == Point{1, 1});
    const std::vector<Point> s2 = {{1, 1}, {3, 1}};
    CHECK(farthest_point({{0, 0}, {4, 0}}, s2, st) == Point{1, 1});
}

TEST_CASE("farthest point on the parabola chain is the tangency point") {
    // base from (2^i, 2^2i) back to the origin; candidates below the chord
    const int i = 6;
    const Frame base{pw(i), {0, 0}};
    std::vector<Point> S;
    for (int j = 1; j < i; ++j) S.push_back(pw(j));
    S.push_back({1.0, 1.5});
    S.push_back({0.5, 0.7});
    S.push_back({1.5, 2.6});
    Rng rng(4);
    shuffle(S, rng);
    Stats st;
    CHECK(farthest_point(base, S, st) == pw(i - 1));
    CHECK_THROWS_AS(farthest_point(base, {}, st), empty_input_error);
}

TEST_CASE("quickhull on square corners plus center") {
    const std::vector<Point> pts = {
        {1, 1}, {0, 0}, {1, 0}, {0.5, 0.5}, {0, 1}};
    Stats st;
    const Hull h = quickhull(pts, st);
    const std::vector<Point> want = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(h.vertices == want);
    CHECK(st.points_pruned + h.vertices.size() <= pts.size());
}

TEST_CASE("quickhull keeps the whole exponential parabola") {
    const int h_target = 20;
    std::vector<Point> pts;
    pts.push_back({0, 0});
    for (int i = 1; i < h_target; ++i) pts.push_back(pw(i));
    std::vector<Point> sorted = pts;
    Rng rng(6);
    shuffle(pts, rng);
    Stats st;
    const Hull got = quickhull(pts, st);
    CHECK(got.vertices == sorted);  // ascending x along the lower chain
}

TEST_CASE("quickhull matches the reference on seeded uniform points") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto pts = generate({DistKind::Circle, 0}, 50, seed);
        Stats st;
        const Hull got = quickhull(pts, st);
        CHECK(got == monotone_chain(pts));
        CHECK_FALSE(hull_violation(got, pts).has_value());
    }
}

TEST_CASE("quickhull degenerate inputs") {
    Stats st;
    CHECK(quickhull(std::vector<Point>{{3, 4}}, st).vertices ==
          std::vector<Point>{{3, 4}});
    const std::vector<Point> equal = {{1, 2}, {1, 2}, {1, 2}};
    CHECK(quickhull(equal, st).vertices == std::vector<Point>{{1, 2}});
    const std::vector<Point> line = {{2, 2}, {0, 0}, {1, 1}, {3, 3}, {1, 1}};
    CHECK(quickhull(line, st).vertices ==
          std::vector<Point>{{0, 0}, {3, 3}});
    CHECK_THROWS_AS(quickhull({}, st), empty_input_error);
}

TEST_CASE("adversarial call trace peels the parabola one tangency at a time") {
    const std::size_t n = 100, h = 10;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto pts = generate({DistKind::Adversarial, h}, n, seed);
        Stats st;
        std::vector<DetCallRecord> log;
        quickhull(pts, st, &log);
        REQUIRE(log.size() >= h - 2);
        for (std::size_t j = 1; j <= h - 2; ++j) {
            const DetCallRecord& rec = log[j - 1];
            CHECK(rec.frame.p == pw(static_cast<int>(h - j)));
            CHECK(rec.frame.r == Point{0, 0});
            CHECK(rec.farthest == pw(static_cast<int>(h - j - 1)));
            CHECK(rec.subset_size >= n - h);
        }
        // every chain call rescans the fill, so the lower bound is linear in
        // both factors
        CHECK(st.orientation_tests >= (h - 2) * (n - h));
    }
}

TEST_CASE("doubling the adversarial hull size doubles the work") {
    const std::size_t n = 2000;
    auto mean_tests = [&](std::size_t h) {
        double total = 0.0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto pts = generate({DistKind::Adversarial, h}, n, seed);
            Stats st;
            quickhull(pts, st);
            total += static_cast<double>(st.orientation_tests);
        }
        return total / 5.0;
    };
    const double ratio = mean_tests(80) / mean_tests(40);
    MESSAGE("det cost ratio for h 40 -> 80 at n=2000: ", ratio);
    CHECK(ratio > 1.5);
    CHECK(ratio < 2.5);
}

TEST_CASE("recursion depth survives the adversarial chain") {
    const auto pts = generate({DistKind::Adversarial, 300}, 1000, 2);
    Stats st;
    const Hull h = quickhull(pts, st);
    CHECK(st.max_depth >= 297);  // one call per peeled tangency
    CHECK(h.vertices.size() >= 300);
    CHECK(st.points_pruned + h.vertices.size() <= pts.size());
}
