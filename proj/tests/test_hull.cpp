#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullkit/hull.hpp"

using namespace hullkit;

TEST_CASE("cyclic equality forgives rotation only") {
    const Hull a{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
    const Hull rotated{{{2, 2}, {0, 2}, {0, 0}, {2, 0}}};
    const Hull reversed{{{0, 0}, {0, 2}, {2, 2}, {2, 0}}};
    const Hull shorter{{{0, 0}, {2, 0}, {2, 2}}};
    CHECK(cyclic_equal(a, a));
    CHECK(cyclic_equal(a, rotated));
    CHECK_FALSE(cyclic_equal(a, reversed));
    CHECK_FALSE(cyclic_equal(a, shorter));
    CHECK(cyclic_equal(Hull{}, Hull{}));
    CHECK(cyclic_equal(Hull{{{1, 1}}}, Hull{{{1, 1}}}));
    CHECK_FALSE(cyclic_equal(Hull{{{1, 1}}}, Hull{{{1, 2}}}));
}

TEST_CASE("hull violations are detected") {
    const std::vector<Point> pts = {
        {0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};

    const Hull good{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
    CHECK_FALSE(hull_violation(good, pts).has_value());

    // clockwise order breaks the strict-left-turn rule
    const Hull clockwise{{{0, 0}, {0, 2}, {2, 2}, {2, 0}}};
    CHECK(hull_violation(clockwise, pts).has_value());

    // dropping a vertex leaves an input point outside
    const Hull missing{{{0, 0}, {2, 0}, {0, 2}}};
    CHECK(hull_violation(missing, pts).has_value());

    // a vertex that is not an input point
    const Hull alien{{{0, 0}, {3, 0}, {2, 2}, {0, 2}}};
    CHECK(hull_violation(alien, pts).has_value());

    // duplicated vertex
    const Hull doubled{{{0, 0}, {2, 0}, {2, 0}, {2, 2}, {0, 2}}};
    CHECK(hull_violation(doubled, pts).has_value());

    // collinear vertex retained
    const std::vector<Point> with_mid = {
        {0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}};
    const Hull collinear{{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}};
    CHECK(hull_violation(collinear, with_mid).has_value());

    // wrong starting vertex
    const Hull shifted{{{2, 0}, {2, 2}, {0, 2}, {0, 0}}};
    CHECK(hull_violation(shifted, pts).has_value());
}

TEST_CASE("degenerate hull shapes validate") {
    const std::vector<Point> seg = {{0, 0}, {1, 1}, {2, 2}};
    CHECK_FALSE(
        hull_violation(Hull{{{0, 0}, {2, 2}}}, seg).has_value());
    CHECK(hull_violation(Hull{{{0, 0}, {1, 1}}}, seg).has_value());

    const std::vector<Point> dot = {{5, 5}, {5, 5}};
    CHECK_FALSE(hull_violation(Hull{{{5, 5}}}, dot).has_value());
    CHECK(hull_violation(Hull{{{5, 5}}}, seg).has_value());
}
