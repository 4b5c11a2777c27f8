#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "pierce/piercing.hpp"

using namespace pierce;

namespace {

std::vector<Shape> random_boxes(std::mt19937_64& rng, std::size_t d, std::size_t n, double k) {
    std::uniform_real_distribution<double> pos(0.0, 2.0 * k), logside(0.0, std::log(k));
    std::vector<Shape> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> c(d);
        for (auto& v : c) v = pos(rng);
        out.push_back(make_box(Point(c), 0.5 * std::exp(logside(rng))));
    }
    return out;
}

// Half-grid of a box computed directly: every combination of {lo, mid, hi} per axis.
std::set<std::vector<double>> half_grid(const AxisBox& b) {
    std::set<std::vector<double>> out;
    const std::size_t d = b.center.dim();
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<double> p(d);
        std::size_t c = code;
        for (std::size_t j = 0; j < d; ++j, c /= 3) p[j] = b.center[j] + (static_cast<double>(c % 3) - 1.0) * b.half_side;
        out.insert(p);
    }
    return out;
}

}  // namespace

TEST_CASE("run_online basics") {
    AlgorithmCenter alg;
    const auto empty = run_online(alg, std::vector<Shape>{});
    CHECK(empty.rounds.empty());
    CHECK(empty.final_set.empty());

    const std::vector<Shape> one = {make_ball({0, 0}, 1)};
    CHECK(run_online(alg, one).final_set.size() == 1);

    const std::vector<Shape> same(3, make_ball({2, 2}, 1));
    const auto t = run_online(alg, same);
    CHECK(t.final_set.size() == 1);
    CHECK_FALSE(t.rounds[0].pierced_on_arrival);
    CHECK(t.rounds[1].pierced_on_arrival);
    CHECK(t.rounds[2].pierced_on_arrival);

    const std::vector<Shape> mixed = {make_ball({0, 0}, 1), make_ball({0, 0, 0}, 1)};
    CHECK_THROWS(run_online(alg, mixed));
}

TEST_CASE("center_step examples") {
    PiercingSet s;
    const auto a = center_step(s, make_ball({3, 3}, 1));
    REQUIRE(a.size() == 1);
    CHECK(a[0] == Point{3, 3});
    s.add({3, 3});
    CHECK(center_step(s, make_ball({3.5, 3}, 1)).empty());
    PiercingSet line;
    line.add({3});
    const auto b = center_step(line, make_interval(10, 12));
    REQUIRE(b.size() == 1);
    CHECK(b[0][0] == 11.0);
}

TEST_CASE("vertex_step examples") {
    PiercingSet s;
    const auto big = vertex_step(s, make_box({0, 0}, 1));
    CHECK(big.size() == 9);
    std::set<std::vector<double>> got;
    for (const auto& p : big) got.insert(p.coords());
    CHECK(got == half_grid(std::get<AxisBox>(make_box({0, 0}, 1))));

    const auto unit = vertex_step(s, make_box({0, 0}, 0.5));
    CHECK(unit.size() == 4);
    for (const auto& p : unit) {
        CHECK(std::abs(p[0]) == 0.5);
        CHECK(std::abs(p[1]) == 0.5);
    }
    s.add({0.1, 0.1});
    CHECK(vertex_step(s, make_box({0, 0}, 1)).empty());
    CHECK_THROWS(vertex_step(PiercingSet{}, make_ball({0, 0}, 1)));
}

TEST_CASE("vertex_step point counts follow the side class") {
    std::mt19937_64 rng(5);
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::size_t two = std::size_t{1} << d, three = static_cast<std::size_t>(std::pow(3, d));
        for (const auto& box : random_boxes(rng, d, 200, 8.0)) {
            PiercingSet empty;
            const auto& b = std::get<AxisBox>(box);
            const auto pts = vertex_step(empty, box);
            const bool unit = std::abs(2.0 * b.half_side - 1.0) <= kDefaultTol;
            CHECK(pts.size() == (unit ? two : three));
            for (const auto& p : pts) CHECK(contains(box, p));
        }
        PiercingSet empty;
        const Shape unit_box = make_box(Point::zeros(d), 0.5);
        CHECK(vertex_step(empty, unit_box).size() == two);
    }
}

TEST_CASE("validity and irrevocability for every algorithm") {
    std::mt19937_64 rng(17);
    for (const std::string name : {"center", "vertex", "naive_always_center", "random_point"}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            auto alg = make_algorithm(name, 42);
            const auto stream = random_boxes(rng, d, 60, 6.0);
            const auto t = run_online(*alg, stream);
            CHECK(transcript_consistent(t));
            for (const auto& s : stream) CHECK(t.final_set.pierces(s));
            // Prefix extension: rebuilding the set round by round reproduces final_set in order.
            std::size_t at = 0;
            for (const auto& r : t.rounds) {
                if (name == "center") CHECK(r.points_added.size() <= 1);
                for (const auto& p : r.points_added) {
                    CHECK(contains(r.object, p));
                    REQUIRE(at < t.final_set.size());
                    CHECK(t.final_set.points()[at++] == p);
                }
            }
            CHECK(at == t.final_set.size());
        }
    }
}

TEST_CASE("piercing set deduplicates after rounding") {
    PiercingSet s;
    CHECK(s.add({0.1, 0.2}));
    CHECK_FALSE(s.add({0.1 + 1e-15, 0.2}));
    CHECK(s.size() == 1);
}

TEST_CASE("transcript hash is deterministic") {
    std::mt19937_64 a(9), b(9);
    auto alg1 = make_algorithm("random_point", 1), alg2 = make_algorithm("random_point", 1);
    const auto t1 = run_online(*alg1, random_boxes(a, 2, 30, 4.0));
    const auto t2 = run_online(*alg2, random_boxes(b, 2, 30, 4.0));
    CHECK(transcript_hash(t1) == transcript_hash(t2));
    auto alg3 = make_algorithm("random_point", 2);
    std::mt19937_64 c(9);
    CHECK(transcript_hash(run_online(*alg3, random_boxes(c, 2, 30, 4.0))) != transcript_hash(t1));
    CHECK_THROWS(make_algorithm("nope"));
}
