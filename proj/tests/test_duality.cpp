#include <cmath>
#include <random>

#include "doctest.h"
#include "pierce/duality.hpp"
#include "pierce/oracle.hpp"

using namespace pierce;

namespace {

const Shape kTriangle = make_polygon({{-1, -1}, {2, -1}, {-1, 2}});

}  // namespace

TEST_CASE("to_covering examples") {
    const Shape disk = make_ball({0, 0}, 1);
    const std::vector<Shape> disks = {make_ball({0, 0}, 1), make_ball({1, 1}, 1), make_ball({5, 0}, 1)};
    const auto inst = to_covering(disks, disk);
    REQUIRE(inst.points.size() == 3);
    CHECK(inst.points[1] == Point{1, 1});
    CHECK(approx_equal(inst.cover_shape, disk, 1e-12));

    const std::vector<Shape> tris = {translate(kTriangle, {3, 1}), translate(kTriangle, {-2, 0.5})};
    const auto ti = to_covering(tris, kTriangle);
    CHECK(approx_equal(ti.cover_shape, make_polygon({{1, 1}, {-2, 1}, {1, -2}}), 1e-12));
    CHECK(approx_equal(ti.points[0], {3, 1}, 1e-12));

    CHECK(to_covering(std::vector<Shape>{}, disk).points.empty());
    const std::vector<Shape> wrong = {make_ball({0, 0}, 1.5)};
    CHECK_THROWS(to_covering(wrong, disk));
    const std::vector<Shape> kind = {make_box({0, 0}, 1)};
    CHECK_THROWS(to_covering(kind, disk));
}

TEST_CASE("equivalence_check examples") {
    CHECK(equivalence_check(make_ball({0, 0}, 1), {0, 0}, {0.5, 0.5}));
    CHECK(contains(make_ball({0.5, 0.5}, 1), {0, 0}));
    CHECK(equivalence_check(kTriangle, {0.3, -0.7}, {0.3, -0.7}));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 2000; ++i) {
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        // Independent evaluation: x in y + T iff x - y satisfies the three half-planes of T.
        const Point v = x - y;
        const bool direct = v[1] >= -1 && v[0] >= -1 && v[0] + v[1] <= 1;
        const bool reflected = contains(translate(reflect(kTriangle, {0, 0}), x), y);
        if (std::abs(boundary_margin(kTriangle, x, y)) > 1e-8) CHECK(direct == reflected);
        CHECK(equivalence_check(kTriangle, x, y));
    }
}

TEST_CASE("biconditional on 10^4 samples with boundary resampling") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3, 3);
    const std::vector<Shape> bodies = {make_ball({0, 0}, 1), make_box({0, 0}, 1), kTriangle};
    std::size_t disagreements = 0, checked = 0;
    while (checked < 10000) {
        const Shape& c = bodies[checked % bodies.size()];
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        if (std::abs(boundary_margin(c, x, y)) <= 10 * kDefaultTol) continue;
        ++checked;
        if (!equivalence_check(c, x, y)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("solutions transfer both ways") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 5);
    for (const Shape& c : {make_ball({0, 0}, 1), make_box({0, 0}, 1), kTriangle}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<Shape> objs;
            for (int i = 0; i < 10; ++i) objs.push_back(translate(c, {u(rng), u(rng)}));
            const auto inst = to_covering(objs, c);
            const auto opt = exact_min_piercing(objs);
            REQUIRE(opt.exact());
            const auto cover = cover_from_piercing(inst, opt.points);
            CHECK(cover.size() == opt.upper);
            CAPTURE(kind_name(c));
            CAPTURE(t);
            CHECK(covers_all(cover, inst.points));
            const auto back = piercing_from_cover(inst, cover);
            for (const auto& o : objs) {
                bool hit = false;
                for (const auto& p : back) hit = hit || contains(o, p);
                CHECK(hit);
            }
        }
    }
}

TEST_CASE("covering instance json") {
    const std::vector<Shape> disks = {make_ball({2, 0}, 1)};
    const json j = to_json(to_covering(disks, make_ball({0, 0}, 1)));
    CHECK(j["points"].size() == 1);
    CHECK(j["cover_shape"]["kind"] == "ball");
}
