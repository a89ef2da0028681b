#include "hullkit/generators.hpp"

#include <cmath>
#include <numbers>

#include "hullkit/errors.hpp"
#include "hullkit/rng.hpp"

namespace hullkit {

namespace {

std::vector<Point> gen_square(std::size_t n, Rng& rng) {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
        p.x = rng.next_unit();
        p.y = rng.next_unit();
    }
    return pts;
}

std::vector<Point> gen_circle(std::size_t n, Rng& rng) {
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const double x = 2.0 * rng.next_unit() - 1.0;
        const double y = 2.0 * rng.next_unit() - 1.0;
        if (x * x + y * y <= 1.0) pts.push_back({x, y});
    }
    return pts;
}

std::vector<Point> gen_on_circle(std::size_t n, Rng& rng) {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
        const double theta = 2.0 * std::numbers::pi * rng.next_unit();
        p.x = std::cos(theta);
        p.y = std::sin(theta);
    }
    return pts;
}

std::vector<Point> gen_quad(std::size_t n, Rng& rng) {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
        const double x = rng.next_unit();
        p.x = x;
        p.y = x * x;
    }
    return pts;
}

Point parabola_point(std::size_t i) {
    return {std::ldexp(1.0, static_cast<int>(i)),
            std::ldexp(1.0, static_cast<int>(2 * i))};
}

std::vector<Point> gen_worst(std::size_t n, Rng& rng) {
    if (n > kWorstCap)
        throw cap_exceeded_error("worst: n must be <= 300 to keep coordinates "
                                 "within the double exponent range");
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) pts.push_back(parabola_point(i));
    shuffle(pts, rng);
    return pts;
}

std::vector<Point> gen_adversarial(std::size_t n, std::size_t h, Rng& rng) {
    if (h < 3 || h > n || h > kWorstCap)
        throw invalid_h_error("adversarial: h must satisfy 3 <= h <= min(n, 300)");
    std::vector<Point> pts;
    pts.reserve(n);
    pts.push_back({0.0, 0.0});
    for (std::size_t i = 1; i < h; ++i) pts.push_back(parabola_point(i));

    // Fill by barycentric combination; reject anything that rounds onto a
    // triangle edge so the interior stays strict.
    const Point a{0.0, 0.0}, b{1.0, 1.0}, c{2.0, 4.0};
    Stats scratch;
    while (pts.size() < n) {
        double u = rng.next_unit();
        double v = rng.next_unit();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const Point p{u * b.x + v * c.x, u * b.y + v * c.y};
        if (orientation(a, b, p, scratch) == Orient::Left &&
            orientation(b, c, p, scratch) == Orient::Left &&
            orientation(c, a, p, scratch) == Orient::Left) {
            pts.push_back(p);
        }
    }
    shuffle(pts, rng);
    return pts;
}

}  // namespace

std::string distribution_name(const Distribution& d) {
    switch (d.kind) {
        case DistKind::Square: return "square";
        case DistKind::Circle: return "circle";
        case DistKind::OnCircle: return "oncircle";
        case DistKind::Quad: return "quad";
        case DistKind::Worst: return "worst";
        case DistKind::Adversarial:
            return "adversarial_h" + std::to_string(d.h);
    }
    return "unknown";
}

std::vector<Point> generate(const Distribution& d, std::size_t n,
                            std::uint64_t seed) {
    if (n == 0) throw empty_input_error("generate: n must be >= 1");
    Rng rng(seed);
    switch (d.kind) {
        case DistKind::Square: return gen_square(n, rng);
        case DistKind::Circle: return gen_circle(n, rng);
        case DistKind::OnCircle: return gen_on_circle(n, rng);
        case DistKind::Quad: return gen_quad(n, rng);
        case DistKind::Worst: return gen_worst(n, rng);
        case DistKind::Adversarial: return gen_adversarial(n, d.h, rng);
    }
    throw std::invalid_argument("generate: unknown distribution");
}

}  // namespace hullkit
