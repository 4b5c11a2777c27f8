#include <cmath>

#include "doctest.h"
#include "pierce/adversary.hpp"
#include "pierce/oracle.hpp"

using namespace pierce;
using doctest::Approx;

namespace {

// Places preset points, one per round, regardless of the object.
class Scripted final : public OnlineAlgorithm {
public:
    explicit Scripted(std::vector<Point> pts) : pts_(std::move(pts)) {}
    std::string name() const override { return "scripted"; }
    std::vector<Point> step(const PiercingSet&, const Shape&) override { return {pts_.at(i_++)}; }

private:
    std::vector<Point> pts_;
    std::size_t i_ = 0;
};

std::vector<Shape> emitted(const AdversaryRun& run) {
    std::vector<Shape> out;
    for (const auto& r : run.transcript.rounds) out.push_back(r.object);
    return out;
}

double floor_log(double base, double v) { return std::floor(std::log(v) / std::log(base) + 1e-9); }

}  // namespace

TEST_CASE("interval nest follow rule") {
    const Interval s{0, 16};
    const std::vector<Point> six = {{6}}, twelve = {{12}}, eight = {{8}};
    auto a = IntervalNestAdversary::follow(s, six, 1e-3);
    CHECK(a.lo == Approx(6.001));
    CHECK(a.hi == 16);
    auto b = IntervalNestAdversary::follow(s, twelve, 1e-3);
    CHECK(b.lo == 0);
    CHECK(b.hi == Approx(11.999));
    auto c = IntervalNestAdversary::follow(s, eight, 1e-3);
    CHECK(c.lo == Approx(8.001));
    CHECK(c.hi == 16);
}

TEST_CASE("interval nest forces n points against Center") {
    IntervalNestAdversary adv(50);
    AlgorithmCenter alg;
    const auto run = play(adv, alg);
    CHECK(run.ok());
    CHECK(run.alg_points() == 50);
    CHECK(run.forced_rounds() == 50);
    const auto objs = emitted(run);
    CHECK(verify_witness(objs, run.witness));
    CHECK(interval_opt(objs).upper == 1);
    CHECK(std::get<Interval>(objs.front()).hi == std::ldexp(1.0, 51));
}

TEST_CASE("interval nest rejects an answer outside the interval") {
    IntervalNestAdversary adv(3);
    Scripted alg(std::vector<Point>{Point{100.0}});
    CHECK_THROWS(play(adv, alg));
}

TEST_CASE("alpha-fat nest first rounds") {

    AlphaFatNestAdversary adv(0.5, 8, 0.01);
    CHECK(adv.width_of_round(1) == 8);
    CHECK(adv.width_of_round(2) == Approx(8 * 0.5 / 2.01));
    std::vector<Point> placed;
    const auto d1 = adv.next(placed, {});
    REQUIRE(d1);
    const auto& e1 = std::get<AxisEllipse2D>(d1->object);
    CHECK(e1.center == Point{0, 0});
    CHECK(e1.semi_minor == 8);
    CHECK(e1.semi_major == 16);
    placed.push_back({1, 0});
    const auto d2 = adv.next(placed, std::span(placed).last(1));
    REQUIRE(d2);
    const auto& e2 = std::get<AxisEllipse2D>(d2->object);
    CHECK(e2.center[0] == Approx(-4));
    CHECK(e2.center[1] == 0);
    CHECK(e2.semi_minor == Approx(1.990).epsilon(1e-3));
    CHECK(e2.semi_major == Approx(3.980).epsilon(1e-3));
    CHECK(e2.semi_major < e1.semi_minor / 2);
    CHECK_FALSE(contains(d2->object, placed[0]));
    // Nesting by boundary sampling of the inner ellipse.
    for (int i = 0; i < 3600; ++i) {
        const double t = 2 * M_PI * i / 3600.0;
        const Point p{e2.center[0] + e2.semi_minor * std::cos(t), e2.center[1] + e2.semi_major * std::sin(t)};
        REQUIRE(contains(d1->object, p));
    }
}

TEST_CASE("alpha-fat nest against Center, alpha 0.5, k 64") {
    AlphaFatNestAdversary adv(0.5, 64, 0.01);
    AlgorithmCenter alg;
    const auto run = play(adv, alg);
    CHECK(run.ok());
    CHECK(run.forced_rounds() >= floor_log(4.0, 64.0));
    const auto objs = emitted(run);
    CHECK(verify_witness(objs, run.witness));
    CHECK(exact_min_piercing(objs).upper == 1);
    for (const auto& o : objs) CHECK(scale_of(o) >= 1.0);
}

TEST_CASE("GSS hand trace in 2-D") {
    GssGame g({0, 0}, 4, 0.01);
    const Shape s1 = g.planned();
    g.record_emitted(s1);
    g.observe({1, 0});
    const Shape s2 = g.planned();
    const auto& b2 = std::get<AxisBox>(s2);
    CHECK(b2.center[0] == Approx(-2.01));
    CHECK(b2.center[1] == 0);
    CHECK(2 * b2.half_side == 4);
    g.record_emitted(s2);
    const std::vector<HyperRect> boxes = {to_hyperrect(std::get<AxisBox>(s1)), to_hyperrect(b2)};
    const auto q = box_common_intersection(boxes);
    REQUIRE(q);
    CHECK(q->lo[0] == Approx(-2));
    CHECK(q->hi[0] == Approx(-0.01));
    CHECK(q->lo[1] == -2);
    CHECK(q->hi[1] == 2);
    const auto qi = g.running_intersection();
    const auto promised = g.promised_sides();
    for (std::size_t j = 0; j < 2; ++j) CHECK(qi.side(j) == Approx(promised[j]).epsilon(1e-9));
    g.observe({-1, 1});
    REQUIRE(g.finished());
    const auto e = g.empty_cube();
    CHECK(e.lo[0] == Approx(-2));
    CHECK(e.hi[0] == Approx(-0.01));
    CHECK(e.lo[1] == Approx(-2));
    CHECK(e.hi[1] == Approx(-0.01));
    CHECK_FALSE(e.contains({1, 0}));
    CHECK_FALSE(e.contains({-1, 1}));
}

TEST_CASE("GSS tie at the frame center takes the negative sign") {
    GssGame g({0, 0}, 4, 0.01);
    CHECK(g.sign_for({0, 0}, 0) == -1);
    CHECK(g.sign_for({-0.1, 0}, 0) == 1);
}

TEST_CASE("chained GSS against Center meets the round formula") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (double k : {4.0, 8.0, 16.0}) {
            ChainedHypercubeAdversary adv(d, k, 0.01);
            AlgorithmCenter alg;
            const auto run = play(adv, alg);
            CAPTURE(d);
            CAPTURE(k);
            CHECK(run.ok());
            const double need = d * floor_log(2.0, k / 1.02) + std::ldexp(1.0, static_cast<int>(d));
            CHECK(static_cast<double>(run.alg_points()) >= need);
            CHECK(run.forced_rounds() == run.transcript.rounds.size());
            const auto objs = emitted(run);
            CHECK(verify_witness(objs, run.witness));
            for (const auto& o : objs) {
                CHECK(scale_of(o) >= 1.0 - 1e-9);
                CHECK(scale_of(o) <= k + 1e-9);
            }
            for (const auto& c : adv.certificates()) {
                CHECK(c.intersection_ok);
                CHECK(c.empty_ok);
            }
        }
    }
    ChainedHypercubeAdversary d2(2, 16, 0.01);
    AlgorithmCenter alg;
    CHECK(play(d2, alg).alg_points() >= 10);
}

TEST_CASE("illumination search example") {
    const std::vector<Point> centers = {{0, 0}}, placed = {{0.2, 0.1}};
    const HyperRect unit{{-0.5, -0.5}, {0.5, 0.5}};
    auto ok = [&](const Point& c) {
        const bool far = distance_inf(c, placed[0]) > 0.5;
        const bool fits = std::max(std::abs(c[0]), std::abs(c[1])) <= 1.0 - 1e-9;
        return far && fits;
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j <= 6; ++j) CHECK(ok({-0.45 + 0.025 * i, -0.45 + 0.025 * j}));
    // On x = -0.3 the distance to the placed point is exactly 1/2, which the strict rule rejects.
    CHECK_FALSE(ok({-0.3, -0.4}));
    const auto c2 = illumination_next_center(centers, placed, unit);
    REQUIRE(c2);
    CHECK(ok(*c2));
}

TEST_CASE("unit hypercube illumination completes 2^d rounds") {
    for (std::size_t d = 1; d <= 3; ++d) {
        UnitHypercubeIllumination adv(d);
        AlgorithmCenter alg;
        const auto run = play(adv, alg);
        CHECK(run.ok());
        CHECK(run.transcript.rounds.size() == (std::size_t{1} << d));
        CHECK(run.alg_points() == (std::size_t{1} << d));
        CHECK(verify_witness(emitted(run), run.witness));
        for (const auto& o : emitted(run)) CHECK(scale_of(o) == Approx(1.0));
    }
    UnitHypercubeIllumination d2(2);
    AlgorithmCenter alg;
    const auto first = d2.next({}, {});
    REQUIRE(first);
    CHECK(std::get<AxisBox>(first->object).center == Point{0, 0});
}

TEST_CASE("3-D ball game numeric trace") {
    const std::vector<int> signs = {-1, -1, -1};
    const Point c = BallGameAdversary::empty_center(3, 10, 0.0025, 0.01, signs);
    CHECK(c[0] == Approx(-5.0025));
    CHECK(c[1] == Approx(-5.0025));
    CHECK(c[2] == Approx(-2.4963).epsilon(1e-4));
    const double step = 10 + 2 * 0.0025;
    const std::vector<Point> centers = {{0, 0, 0}, {-step, 0, 0}, {-step, -step, 0}};
    double dmax = 0;
    for (const auto& cj : centers) dmax = std::max(dmax, distance(c, cj));
    CHECK(dmax == Approx(7.502).epsilon(1e-3));
    CHECK(dmax <= 10 * 3.01 / 4.01);
    const double radius = 10 / 4.01;
    for (const Point& p : {Point{2, 0, 0}, Point{-10, 1, 0}, Point{-10, -10, 0.5}}) CHECK(distance(c, p) > radius);
}

TEST_CASE("2-D ball game empty radius") {
    BallGameAdversary adv(2, 64, 0.01);
    CHECK(10 / adv.shrink() == Approx(3.736).epsilon(1e-3));
}

TEST_CASE("chained ball games at k = 64") {
    for (std::size_t d : {2u, 3u}) {
        BallGameAdversary adv(d, 64, 0.01);
        AlgorithmCenter alg;
        const auto run = play(adv, alg);
        CHECK(run.ok());
        const double need = d == 3 ? 10 : 9;
        CHECK(static_cast<double>(run.forced_rounds()) >= need);
        CHECK(verify_witness(emitted(run), run.witness));
        for (const auto& c : adv.certificates()) {
            CHECK(c.max_center_distance <= c.stated_bound + 1e-9 * std::max(1.0, c.r));
            CHECK(c.contained);
            CHECK(c.empty);
        }
    }
}

TEST_CASE("random placer never pierces an adversary object on arrival") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const std::string tag : {"chained_gss", "gsr2d", "gsr3d", "unit_illumination", "interval_nest", "alpha_fat_nest"}) {
            const std::size_t d = tag == "gsr3d" ? 3 : (tag == "interval_nest" ? 1 : 2);
            auto adv = make_adversary(tag, d, tag == "alpha_fat_nest" ? 64 : 16, 0.01, 0.01, 0.5, 20);
            RandomPointPlacer alg(seed);
            const auto run = play(*adv, alg);
            CAPTURE(tag);
            CAPTURE(seed);
            CHECK(run.ok());
            CHECK(run.forced_rounds() == run.transcript.rounds.size());
        }
    }
}

TEST_CASE("margins must dominate the tolerance") {
    CHECK_THROWS(require_margin(0.01, 1e-4, "eps"));
    CHECK_NOTHROW(require_margin(0.01, 1e-9, "eps"));
    CHECK_THROWS(ChainedHypercubeAdversary(2, 16, 0.01, 1e-4));
    CHECK_THROWS(BallGameAdversary(3, 64, 0.01, 1e-3));
    CHECK_THROWS(make_adversary("bogus", 2, 4, 0.01, 0.01, 1, 1));
}

TEST_CASE("adversary dump carries demands and witness") {
    auto adv = make_adversary("chained_gss", 2, 8, 0.01, 0.01, 1, 0);
    AlgorithmCenter alg;
    const auto run = play(*adv, alg);
    const json j = to_json(run, *adv);
    CHECK(j["tag"] == "chained_gss");
    CHECK(j["demands"].size() == run.transcript.rounds.size());
    CHECK(j["witness"].size() == 2);
}
