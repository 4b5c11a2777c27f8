#include <cmath>
#include <random>

#include "doctest.h"
#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"

using namespace pierce;
using doctest::Approx;

namespace {

// Reference convex distance: bisection on t for the boundary point x + t (y - x) of x + C,
// using only the containment predicate.
double ref_convex_distance(const Shape& c, const Point& x, const Point& y) {
    if (approx_equal(x, y, 0.0)) return 0.0;
    const Shape xc = translate(c, x);
    const Point dir = y - x;
    double lo = 0.0, hi = 1.0;
    while (contains(xc, x + hi * dir, 0.0)) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (contains(xc, x + mid * dir, 0.0) ? lo : hi) = mid;
    }
    return 1.0 / lo;  // |x - y| / |x - v| with v = x + lo (y - x)
}

Point random_point(std::mt19937_64& rng, std::size_t d, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> c(d);
    for (auto& v : c) v = u(rng);
    return Point(c);
}

}  // namespace

TEST_CASE("contains on closed shapes") {
    CHECK(contains(make_ball({0, 0}, 1), {0.6, 0.8}));
    CHECK(contains(make_box({0, 0}, 1), {1, 1}));
    CHECK_FALSE(contains(make_interval(0, 2), {3}));
    CHECK_FALSE(contains(make_box({0, 0}, 1), {1.0 + 1e-12, 0}));
    CHECK(contains(make_ellipse({0, 0}, 1, 2, 1), {0, 2}));
    CHECK_FALSE(contains(make_ellipse({0, 0}, 1, 2, 1), {2, 0}));
    CHECK_THROWS_AS(contains(make_ball({0, 0}, 1), {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("shape_center") {
    CHECK(shape_center(make_interval(2, 6))[0] == Approx(4));
    CHECK(shape_center(make_ball({1, 2}, 3)) == Point{1, 2});
    const Point c = shape_center(make_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(c[0] == Approx(1).epsilon(1e-6));
    CHECK(c[1] == Approx(1).epsilon(1e-6));
}

TEST_CASE("fat_metrics examples") {
    const auto ball = fat_metrics(make_ball({0, 0}, 1), Norm::LInf);
    CHECK(ball.width == Approx(1 / std::sqrt(2.0)));
    CHECK(ball.alpha == Approx(1 / std::sqrt(2.0)));
    const auto box = fat_metrics(make_box({0, 0}, 1), Norm::L2);
    CHECK(box.width == Approx(1));
    CHECK(box.height == Approx(std::sqrt(2.0)));
    CHECK(box.alpha == Approx(1 / std::sqrt(2.0)));
    const auto ell = fat_metrics(make_ellipse({0, 0}, 2, 4), Norm::L2);
    CHECK(ell.width == Approx(2));
    CHECK(ell.height == Approx(4));
    CHECK(ell.alpha == Approx(0.5));
    CHECK(fat_metrics(make_ball({0, 0, 0}, 2), Norm::L2).alpha == Approx(1));
    CHECK(fat_metrics(make_box({0, 0, 0}, 2), Norm::LInf).alpha == Approx(1));
}

TEST_CASE("fat_metrics sandwich by boundary sampling") {
    // Inner ball/cube of radius width is inside s; outer one of radius width/alpha contains s.
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    const std::vector<Shape> shapes = {make_ellipse({1, -2}, 1.5, 3, 0), make_ball({0, 0}, 2),
                                       make_box({3, 3}, 1.25), make_polygon({{-1, -1}, {3, -1}, {0, 2}})};
    for (const auto& s : shapes) {
        for (Norm norm : {Norm::L2, Norm::LInf}) {
            const auto m = fat_metrics(s, norm);
            const Shape centered = translate(s, -m.center);
            for (int i = 0; i < 10000; ++i) {
                Point u{g(rng), g(rng)};
                const double len = norm == Norm::L2 ? norm2(u) : norm_inf(u);
                u = (1.0 / len) * u;
                const Point boundary = (1.0 / gauge(centered, u)) * u;
                const double dist = norm == Norm::L2 ? norm2(boundary) : norm_inf(boundary);
                REQUIRE(dist >= m.width - 1e-6);
                REQUIRE(dist <= m.width / m.alpha + 1e-6);
            }
        }
    }
}

TEST_CASE("reflect") {
    const Shape r = reflect(make_ball({1, 2}, 3), {0, 0});
    CHECK(approx_equal(r, make_ball({-1, -2}, 3), 1e-12));
    const Shape tri = reflect(make_polygon({{0, 0}, {2, 0}, {0, 1}}), {1, 0});
    CHECK(approx_equal(tri, make_polygon({{2, 0}, {0, 0}, {2, -1}}), 1e-12));
    const Shape ell = make_ellipse({0.5, 1}, 1, 2, 0);
    CHECK(approx_equal(reflect(reflect(ell, {3, -1}), {3, -1}), ell, 1e-12));
    for (const auto& s : {make_interval(-1, 4), make_box({1, 1, 1}, 2), make_ball({0, 5}, 1),
                          make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})})
        CHECK(approx_equal(reflect(s, shape_center(s)), s, 1e-6));
}

TEST_CASE("convex_distance examples and reference") {
    CHECK(convex_distance(make_ball({0, 0}, 1), {0, 0}, {3, 4}) == Approx(5));
    CHECK(convex_distance(make_box({0, 0}, 1), {0, 0}, {2, 0}) == Approx(2));
    CHECK(convex_distance(make_box({0, 0}, 1), {0.3, 0.1}, {0.3, 0.1}) == 0.0);
    CHECK_THROWS(convex_distance(make_ball({3, 0}, 1), {0, 0}, {1, 1}));

    std::mt19937_64 rng(11);
    const Shape tri = make_polygon({{-1, -1}, {2, -1}, {-1, 2}});
    for (int i = 0; i < 200; ++i) {
        const Point x = random_point(rng, 2, -3, 3), y = random_point(rng, 2, -3, 3);
        CHECK(convex_distance(tri, x, y) == Approx(ref_convex_distance(tri, x, y)).epsilon(1e-9));
    }
}

TEST_CASE("convex distance symmetry and reflection property") {
    std::mt19937_64 rng(3);
    const Shape disk = make_ball({0, 0}, 1.5), sq = make_box({0, 0}, 1), ell = make_ellipse({0, 0}, 1, 2);
    const Shape tri = make_polygon({{-1, -1}, {2, -1}, {-1, 2}});
    const Shape quad = make_polygon({{-1, -0.5}, {1.5, -1}, {2, 1}, {-0.5, 1.5}});
    for (int i = 0; i < 1000; ++i) {
        const Point x = random_point(rng, 2, -4, 4), y = random_point(rng, 2, -4, 4);
        for (const auto& c : {disk, sq, ell})
            REQUIRE(std::abs(convex_distance(c, x, y) - convex_distance(c, y, x)) <= 1e-9 * std::max(1.0, convex_distance(c, x, y)));
        for (const auto& c : {tri, quad}) {
            const Shape minus_c = reflect(c, {0, 0});
            REQUIRE(std::abs(convex_distance(c, x, y) - convex_distance(minus_c, y, x)) <= 1e-9 * std::max(1.0, convex_distance(c, x, y)));
        }
    }
}

TEST_CASE("box_common_intersection") {
    const std::vector<HyperRect> two = {to_hyperrect(std::get<AxisBox>(make_box({0, 0}, 0.5))),
                                        to_hyperrect(std::get<AxisBox>(make_box({0.5, 0}, 0.5)))};
    const auto q = box_common_intersection(two);
    REQUIRE(q);
    CHECK(q->lo == std::vector<double>{0, -0.5});
    CHECK(q->hi == std::vector<double>{0.5, 0.5});
    const std::vector<HyperRect> apart = {two[0], to_hyperrect(std::get<AxisBox>(make_box({5, 5}, 0.5)))};
    CHECK_FALSE(box_common_intersection(apart));
    const auto one = box_common_intersection(std::span(two).first(1));
    REQUIRE(one);
    CHECK(one->lo == two[0].lo);
    CHECK_THROWS(box_common_intersection(std::span<const HyperRect>{}));
}

TEST_CASE("shape validation") {
    CHECK_THROWS(make_interval(2, 1));
    CHECK_THROWS(make_box({0, 0}, 0));
    CHECK_THROWS(make_ball({0, 0}, -1));
    CHECK_THROWS(make_polygon({{0, 0}, {0, 1}, {1, 0}}));  // clockwise
    CHECK_THROWS(make_ellipse({0, 0}, 3, 2));
}

TEST_CASE("shape json round trip") {
    for (const auto& s : {make_interval(0, 2), make_box({1, 2, 3}, 0.5), make_ball({0, 1}, 2),
                          make_polygon({{0, 0}, {1, 0}, {0, 1}}), make_ellipse({0, 0}, 1, 3, 0)}) {
        const json j = to_json(s);
        CHECK(j.contains("kind"));
        CHECK(approx_equal(shape_from_json(j), s, 0.0));
    }
}
