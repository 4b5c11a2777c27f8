#include "pierce/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "pierce/adversary.hpp"
#include "pierce/bounds.hpp"
#include "pierce/duality.hpp"
#include "pierce/harness.hpp"
#include "pierce/oracle.hpp"

namespace pierce {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Check = std::function<Outcome()>;

Point gaussian_point(std::mt19937_64& rng, std::size_t d) {
    std::normal_distribution<double> g;
    std::vector<double> v(d);
    for (auto& x : v) x = g(rng);
    return Point(v);
}

Point uniform_point(std::mt19937_64& rng, std::size_t d, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(d);
    for (auto& x : v) x = u(rng);
    return Point(v);
}

std::vector<Shape> random_boxes(std::mt19937_64& rng, std::size_t d, std::size_t n, double k) {
    std::uniform_real_distribution<double> logside(0.0, std::log(k));
    std::uniform_int_distribution<int> unit(0, 4);
    std::vector<Shape> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double side = unit(rng) == 0 ? 1.0 : std::exp(logside(rng));
        out.push_back(make_box(uniform_point(rng, d, 0, 2 * k), side / 2));
    }
    return out;
}

std::vector<Shape> random_planar(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> rad(0.5, 1.5);
    std::uniform_int_distribution<int> kind(0, 1), axis(0, 1);
    std::vector<Shape> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point c = uniform_point(rng, 2, 0, 4);
        const double a = rad(rng);
        out.push_back(kind(rng) == 0 ? make_ball(c, a) : make_ellipse(c, a, a * (1 + rad(rng)), axis(rng)));
    }
    return out;
}

std::vector<Shape> random_intervals(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> pos(0, 20), len(0.5, 6);
    std::vector<Shape> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = pos(rng);
        out.push_back(make_interval(lo, lo + len(rng)));
    }
    return out;
}

std::string count_of(std::size_t bad, std::size_t total, const char* what) {
    std::ostringstream s;
    s << bad << "/" << total << " " << what;
    return s.str();
}

Outcome from_count(std::size_t bad, std::size_t total, const char* what) { return {bad == 0, count_of(bad, total, what)}; }

// ---------------------------------------------------------------- geometry

Outcome distance_symmetry() {
    std::mt19937_64 rng(101);
    const std::vector<Shape> bodies = {make_ball({0, 0}, 1.5), make_box({0, 0}, 1), make_ellipse({0, 0}, 1, 2)};
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const Point x = uniform_point(rng, 2, -4, 4), y = uniform_point(rng, 2, -4, 4);
        for (const auto& c : bodies) {
            const double a = convex_distance(c, x, y), b = convex_distance(c, y, x);
            if (std::abs(a - b) > 1e-9 * std::max(1.0, a)) ++bad;
        }
    }
    return from_count(bad, 3000, "asymmetric pairs");
}

Outcome distance_reflection() {
    std::mt19937_64 rng(102);
    const std::vector<Shape> bodies = {make_polygon({{-1, -1}, {2, -1}, {-1, 2}}),
                                       make_polygon({{-1, -0.5}, {1.5, -1}, {2, 1}, {-0.5, 1.5}})};
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const Point x = uniform_point(rng, 2, -4, 4), y = uniform_point(rng, 2, -4, 4);
        for (const auto& c : bodies) {
            const double a = convex_distance(c, x, y), b = convex_distance(reflect(c, {0, 0}), y, x);
            if (std::abs(a - b) > 1e-9 * std::max(1.0, a)) ++bad;
        }
    }
    return from_count(bad, 2000, "mismatches");
}

Outcome reflect_fixes_symmetric() {
    const std::vector<Shape> shapes = {make_interval(-1, 4), make_box({1, 2, 3}, 2), make_ball({0, 5}, 1),
                                       make_ellipse({2, 2}, 1, 3, 0), make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                                       make_polygon({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}})};
    std::size_t bad = 0;
    for (const auto& s : shapes)
        if (!approx_equal(reflect(s, shape_center(s)), s, 1e-6)) ++bad;
    return from_count(bad, shapes.size(), "shapes changed");
}

Outcome fat_sandwich() {
    std::mt19937_64 rng(103);
    const std::vector<Shape> shapes = {make_ellipse({1, -2}, 1.5, 3, 0), make_ball({0, 0}, 2), make_box({3, 3}, 1.25),
                                       make_polygon({{-1, -1}, {3, -1}, {0, 2}}), make_ball({0, 0, 0}, 1),
                                       make_box({1, 1, 1}, 0.5)};
    std::size_t bad = 0, total = 0;
    for (const auto& s : shapes)
        for (Norm norm : {Norm::L2, Norm::LInf}) {
            const auto m = fat_metrics(s, norm);
            const Shape centered = translate(s, -m.center);
            for (int i = 0; i < 10000; ++i, ++total) {
                Point u = gaussian_point(rng, dimension(s));
                u = (1.0 / (norm == Norm::L2 ? norm2(u) : norm_inf(u))) * u;
                const Point b = (1.0 / gauge(centered, u)) * u;
                const double dist = norm == Norm::L2 ? norm2(b) : norm_inf(b);
                if (dist < m.width - 1e-6 || dist > m.width / m.alpha + 1e-6) ++bad;
            }
        }
    return from_count(bad, total, "boundary samples outside the sandwich");
}

// ---------------------------------------------------------------- piercing

Outcome validity_and_prefix() {
    std::mt19937_64 rng(201);
    std::size_t bad = 0, runs = 0;
    for (const char* name : {"center", "vertex", "naive_always_center", "random_point"})
        for (std::size_t d = 1; d <= 3; ++d, ++runs) {
            auto alg = make_algorithm(name, 5);
            const auto stream = random_boxes(rng, d, 60, 6.0);
            const auto t = run_online(*alg, stream);
            bool ok = transcript_consistent(t);
            for (const auto& s : stream) ok = ok && t.final_set.pierces(s);
            std::size_t at = 0;
            for (const auto& r : t.rounds)
                for (const auto& p : r.points_added) ok = ok && at < t.final_set.size() && t.final_set.points()[at++] == p;
            ok = ok && at == t.final_set.size();
            if (!ok) ++bad;
        }
    return from_count(bad, runs, "runs with an unpierced object or a rewritten prefix");
}

Outcome center_step_property() {
    std::mt19937_64 rng(202);
    std::size_t bad = 0, rounds = 0;
    for (std::size_t d = 1; d <= 3; ++d) {
        PiercingSet set;
        for (const auto& s : random_boxes(rng, d, 200, 8.0)) {
            ++rounds;
            const auto pts = center_step(set, s);
            if (pts.size() > 1 || (pts.size() == 1 && !contains(s, pts[0]))) ++bad;
            for (const auto& p : pts) set.add(p);
        }
    }
    return from_count(bad, rounds, "rounds");
}

Outcome vertex_step_property(const VertexStepFn& step) {
    std::mt19937_64 rng(203);
    std::size_t bad = 0, rounds = 0;
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::size_t two = std::size_t{1} << d, three = static_cast<std::size_t>(std::lround(std::pow(3.0, d)));
        PiercingSet set;
        for (const auto& s : random_boxes(rng, d, 200, 8.0)) {
            ++rounds;
            const bool pierced = set.pierces(s);
            const auto pts = step(set, s, kDefaultTol);
            const bool unit = std::abs(2.0 * std::get<AxisBox>(s).half_side - 1.0) <= kDefaultTol;
            const std::size_t want = pierced ? 0 : (unit ? two : three);
            PiercingSet distinct;
            for (const auto& p : pts) distinct.add(p);
            bool ok = pts.size() == want && distinct.size() == want;
            for (const auto& p : pts) ok = ok && contains(s, p);
            if (!ok) ++bad;
            for (const auto& p : pts) set.add(p);
        }
    }
    return from_count(bad, rounds, "rounds with the wrong point count or a point outside the box");
}

// ---------------------------------------------------------------- adversaries

struct Battery {
    std::size_t runs = 0;
    std::size_t placed_inside = 0;     // runs where the driver saw a pierced or dishonest round
    std::size_t witness_missing = 0;
    std::size_t intersection_bad = 0;  // GSS certificates with wrong Q sides
    std::size_t intersection_total = 0;
    std::size_t below_floor = 0;
    std::size_t scale_bad = 0;
    std::size_t opt_not_one = 0;
    std::vector<std::string> samples;
};

Battery run_battery() {
    Battery b;
    struct Case {
        std::string tag;
        std::size_t d;
        double k;
    };
    std::vector<Case> cases;
    for (std::size_t d = 1; d <= 3; ++d)
        for (double k : {4.0, 16.0}) cases.push_back({"chained_gss", d, k});
    for (std::size_t d = 1; d <= 3; ++d) cases.push_back({"unit_illumination", d, 1.0});
    cases.push_back({"gsr2d", 2, 64});
    cases.push_back({"gsr3d", 3, 64});
    cases.push_back({"alpha_fat_nest", 2, 64});
    cases.push_back({"interval_nest", 1, 1});

    for (const auto& c : cases) {
        std::vector<std::pair<std::string, std::uint64_t>> algs = {{"center", 0}};
        if (c.tag == "chained_gss" || c.tag == "unit_illumination") algs.emplace_back("vertex", 0);
        for (std::uint64_t s = 0; s < 5; ++s) algs.emplace_back("random_point", s);
        for (const auto& [name, seed] : algs) {
            ++b.runs;
            auto adv = make_adversary(c.tag, c.d, c.k, 0.01, 0.01, 0.5, 30);
            auto alg = make_algorithm(name, seed);
            const auto run = play(*adv, *alg);
            const std::string label = c.tag + " d=" + std::to_string(c.d) + " vs " + name;
            if (!run.ok() || run.forced_rounds() != run.transcript.rounds.size()) {
                ++b.placed_inside;
                b.samples.push_back(label);
            }
            std::vector<Shape> objs;
            for (const auto& r : run.transcript.rounds) objs.push_back(r.object);
            if (!verify_witness(objs, run.witness)) ++b.witness_missing;
            if (objs.size() <= 18 && exact_supported(objs) && exact_min_piercing(objs).upper != 1) ++b.opt_not_one;
            if (const auto* gss = dynamic_cast<const ChainedHypercubeAdversary*>(adv.get()))
                for (const auto& cert : gss->certificates()) {
                    ++b.intersection_total;
                    if (!cert.intersection_ok) ++b.intersection_bad;
                }
            BoundParams p;
            p.d = c.d;
            p.k = c.k;
            p.eps = 0.01;
            p.alpha = 0.5;
            p.n = 30;
            double floor = 0;
            if (c.tag == "chained_gss") floor = lb(LowerClass::Hypercube, p);
            if (c.tag == "unit_illumination") floor = lb(LowerClass::UnitHypercube, p);
            if (c.tag == "gsr2d") floor = lb(LowerClass::Ball2d, p);
            if (c.tag == "gsr3d") floor = lb(LowerClass::Ball3d, p);
            if (c.tag == "alpha_fat_nest") floor = lb(LowerClass::Fat2d, p);
            if (c.tag == "interval_nest") floor = lb(LowerClass::Interval, p);
            if (static_cast<double>(run.alg_points()) < floor) ++b.below_floor;
            if (c.tag != "interval_nest")
                for (const auto& o : objs)
                    if (scale_of(o) < 1 - 1e-9 || scale_of(o) > c.k * (1 + 1e-9)) ++b.scale_bad;
        }
    }
    return b;
}

const Battery& battery() {
    static const Battery b = run_battery();
    return b;
}

// ---------------------------------------------------------------- oracle

Outcome exact_below_greedy() {
    std::mt19937_64 rng(401);
    std::size_t bad = 0, total = 0;
    for (int t = 0; t < 60; ++t) {
        const std::vector<std::vector<Shape>> families = {random_intervals(rng, 10), random_boxes(rng, 2, 10, 4),
                                                          random_boxes(rng, 3, 10, 4), random_planar(rng, 8)};
        for (const auto& f : families) {
            ++total;
            if (exact_min_piercing(f).upper > greedy_piercing(f).upper) ++bad;
        }
    }
    return from_count(bad, total, "instances where exact exceeds greedy");
}

Outcome exact_vs_interval() {
    std::mt19937_64 rng(402);
    std::uniform_int_distribution<std::size_t> nd(1, 12);
    std::size_t bad = 0;
    for (int t = 0; t < 500; ++t) {
        const auto objs = random_intervals(rng, nd(rng));
        const auto e = exact_min_piercing(objs);
        if (!e.exact() || e.upper != interval_opt(objs).upper) ++bad;
    }
    return from_count(bad, 500, "disagreements");
}

Outcome exact_vs_grid() {
    std::mt19937_64 rng(403);
    std::uniform_int_distribution<std::size_t> nd(1, 8);
    std::size_t bad = 0;
    for (int t = 0; t < 200; ++t) {
        const auto objs = random_planar(rng, nd(rng));
        const auto e = exact_min_piercing(objs);
        const auto g = grid_brute_force(objs);
        if (!e.exact() || !g.exact() || e.upper != g.upper) ++bad;
    }
    return from_count(bad, 200, "disagreements with the 0.01 grid");
}

// ---------------------------------------------------------------- bounds

Outcome lb_below_ub() {
    std::size_t bad = 0, total = 0;
    auto le = [&](double a, double b) {
        ++total;
        if (!(a <= b)) ++bad;
    };
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 1024.0}) {
        for (std::size_t d = 1; d <= 4; ++d) {
            BoundParams p;
            p.k = k;
            p.d = d;
            p.eps = 0.01;
            le(lb(LowerClass::Hypercube, p), ub_center(UpperClass::AspectInfFat, p));
            le(lb(LowerClass::Hypercube, p), ub_vertex(k, d));
            le(lb(LowerClass::UnitHypercube, p), ub_vertex(k, d));
        }
        for (double a : {0.25, 0.5, 0.75, 1.0}) {
            BoundParams p;
            p.k = k;
            p.d = 2;
            p.alpha = a;
            le(lb(LowerClass::Fat2d, p), ub_center(UpperClass::Fat2d, p));
        }
        BoundParams b3;
        b3.k = k;
        b3.d = 3;
        le(lb(LowerClass::Ball3d, b3), ub_center(UpperClass::Fat3d, b3));
        BoundParams b2 = b3;
        b2.d = 2;
        le(lb(LowerClass::Ball2d, b2), ub_center(UpperClass::Fat2d, b2));
    }
    return from_count(bad, total, "pairs with lb > ub");
}

Outcome printed_hypercube_gap() {
    std::size_t bad = 0, total = 0;
    for (std::size_t d = 1; d <= 4; ++d)
        for (double k : {2.0, 16.0, 100.0}) {
            ++total;
            BoundParams p;
            p.k = k;
            p.d = d;
            const double two = std::ldexp(1.0, static_cast<int>(d));
            const double gap = ub_center(UpperClass::AspectInfFat, p) - hypercube_center_printed(k, d);
            if (std::abs(gap - two * (two - 1)) > 1e-9 * gap) ++bad;
        }
    return from_count(bad, total, "cases where the gap is not 2^d(2^d-1)");
}

Outcome fat2d_takes_max() {
    std::size_t bad = 0, total = 0;
    for (double a : {0.25, 0.5, 1.0})
        for (double k : {1.0, 4.0, 100.0}) {
            ++total;
            BoundParams p;
            p.alpha = a;
            p.k = k;
            p.d = 2;
            if (ub_center(UpperClass::Fat2d, p) != std::max(fat2d_statement(p), fat2d_proof(p))) ++bad;
        }
    return from_count(bad, total, "cases");
}

// ---------------------------------------------------------------- duality

Outcome translate_biconditional() {
    std::mt19937_64 rng(601);
    std::uniform_real_distribution<double> u(-3, 3);
    const std::vector<Shape> bodies = {make_ball({0, 0}, 1), make_box({0, 0}, 1), make_polygon({{-1, -1}, {2, -1}, {-1, 2}})};
    std::size_t bad = 0, checked = 0, resampled = 0;
    while (checked < 10000) {
        const Shape& c = bodies[checked % bodies.size()];
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        if (std::abs(boundary_margin(c, x, y)) <= 10 * kDefaultTol) {
            ++resampled;
            continue;
        }
        ++checked;
        if (!equivalence_check(c, x, y)) ++bad;
    }
    auto o = from_count(bad, checked, "disagreements");
    o.detail += ", " + std::to_string(resampled) + " boundary samples redrawn";
    return o;
}

Outcome solution_transfer() {
    std::mt19937_64 rng(602);
    std::uniform_real_distribution<double> u(0, 5);
    std::size_t bad = 0, total = 0;
    for (const Shape& c : {make_ball({0, 0}, 1), make_box({0, 0}, 1), make_polygon({{-1, -1}, {2, -1}, {-1, 2}})})
        for (int t = 0; t < 20; ++t, ++total) {
            std::vector<Shape> objs;
            for (int i = 0; i < 10; ++i) objs.push_back(translate(c, {u(rng), u(rng)}));
            const auto inst = to_covering(objs, c);
            const auto opt = exact_min_piercing(objs);
            const auto cover = cover_from_piercing(inst, opt.points);
            bool ok = opt.exact() && cover.size() == opt.upper && covers_all(cover, inst.points);
            const auto back = piercing_from_cover(inst, cover);
            for (const auto& o : objs) {
                bool hit = false;
                for (const auto& p : back) hit = hit || contains(o, p);
                ok = ok && hit;
            }
            if (!ok) ++bad;
        }
    return from_count(bad, total, "instances");
}

// ---------------------------------------------------------------- harness

ScenarioConfig random_config(const std::string& shape, std::size_t d, const std::string& alg, double k,
                             std::size_t m, std::size_t n, std::uint64_t seed, double alpha = 1.0) {
    ScenarioConfig c;
    c.id = "verify";
    c.shape = shape;
    c.d = d;
    c.algorithm = alg;
    c.k = k;
    c.n = n;
    c.alpha = alpha;
    c.stream.kind = StreamSpec::Kind::Random;
    c.stream.seed = seed;
    c.stream.clusters = m;
    return c;
}

Outcome exact_runs_under_ceiling() {
    std::vector<ScenarioConfig> cfgs;
    for (std::uint64_t s = 0; s < 5; ++s) {
        cfgs.push_back(random_config("hypercube", 2, "center", 4, 3, 12, s));
        cfgs.push_back(random_config("hypercube", 3, "vertex", 8, 2, 12, s));
        cfgs.push_back(random_config("ball", 2, "center", 4, 2, 12, s));
        cfgs.push_back(random_config("ball", 3, "center", 4, 1, 20, s));
        cfgs.push_back(random_config("ellipse", 2, "center", 4, 2, 12, s, 0.5));
        cfgs.push_back(random_config("interval", 1, "center", 16, 4, 15, s));
    }
    std::size_t bad = 0, exact = 0;
    for (const auto& c : cfgs) {
        const auto r = run_scenario(c).result;
        if (r.opt_lower == r.opt_upper) ++exact;
        if (!r.ok()) ++bad;
    }
    auto o = from_count(bad, cfgs.size(), "runs with a violation");
    o.detail += ", " + std::to_string(exact) + " with exact OPT";
    return o;
}

Outcome adversary_runs_meet_floor() {
    std::vector<ScenarioConfig> cfgs;
    auto add = [&](const std::string& tag, const std::string& shape, std::size_t d, double k, const std::string& alg) {
        ScenarioConfig c;
        c.shape = shape;
        c.d = d;
        c.k = k;
        c.n = 50;
        c.alpha = 0.5;
        c.algorithm = alg;
        c.stream.kind = StreamSpec::Kind::Adversary;
        c.stream.tag = tag;
        c.id = tag;
        cfgs.push_back(c);
    };
    add("interval_nest", "interval", 1, 1, "center");
    add("alpha_fat_nest", "ellipse", 2, 64, "center");
    add("chained_gss", "hypercube", 2, 16, "center");
    add("chained_gss", "hypercube", 3, 8, "vertex");
    add("unit_illumination", "hypercube", 3, 1, "center");
    add("gsr3d", "ball", 3, 64, "center");
    add("gsr2d", "ball", 2, 64, "random_point");
    std::size_t bad = 0;
    for (const auto& c : cfgs) {
        const auto r = run_scenario(c).result;
        if (!r.ok() || r.opt_upper != 1 || static_cast<double>(r.alg_points) < r.bound_lb) ++bad;
    }
    return from_count(bad, cfgs.size(), "runs below the floor or without OPT 1");
}

Outcome determinism() {
    std::size_t bad = 0, total = 0;
    for (const auto& c : {random_config("hypercube", 2, "random_point", 8, 3, 30, 11),
                          random_config("ellipse", 2, "center", 4, 2, 25, 12, 0.5)}) {
        ++total;
        const auto a = run_scenario(c), b = run_scenario(c);
        const auto sa = random_stream(c), sb = random_stream(c);
        bool same = a.result.transcript_hash == b.result.transcript_hash && sa.size() == sb.size();
        for (std::size_t i = 0; same && i < sa.size(); ++i) same = to_json(sa[i]).dump() == to_json(sb[i]).dump();
        if (!same) ++bad;
    }
    ScenarioConfig g;
    g.shape = "hypercube";
    g.d = 2;
    g.k = 16;
    g.algorithm = "random_point";
    g.algorithm_seed = 4;
    g.stream.kind = StreamSpec::Kind::Adversary;
    g.stream.tag = "chained_gss";
    ++total;
    if (run_scenario(g).result.transcript_hash != run_scenario(g).result.transcript_hash) ++bad;
    return from_count(bad, total, "configurations with differing transcripts");
}

Outcome tolerance_guard() {
    ScenarioConfig c;
    c.shape = "hypercube";
    c.d = 2;
    c.k = 16;
    c.eps = 0.01;
    c.tol = 1e-4;
    c.stream.kind = StreamSpec::Kind::Adversary;
    c.stream.tag = "chained_gss";
    try {
        run_scenario(c);
    } catch (const std::invalid_argument& e) {
        return {true, std::string("rejected: ") + e.what()};
    }
    return {false, "a tolerance above eps / 1000 was accepted"};
}

}  // namespace

std::vector<Point> vertex_step_corners_only(const PiercingSet& state, const Shape& object, double tol) {
    const auto* box = std::get_if<AxisBox>(&object);
    if (box == nullptr) throw std::invalid_argument("vertex step: axis boxes only");
    if (state.pierces(object, tol)) return {};
    const std::size_t d = box->center.dim();
    std::vector<Point> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Point p = box->center;
        for (std::size_t j = 0; j < d; ++j) p[j] += ((mask >> j) & 1u) ? box->half_side : -box->half_side;
        out.push_back(p);
    }
    return out;
}

std::vector<PropertyResult> run_verify(const VerifyOptions& options, const std::function<void(const PropertyResult&)>& on_result) {
    const auto& step = options.vertex_step;
    const std::vector<std::tuple<const char*, const char*, Check>> props = {
        {"geometry", "convex distance is symmetric for centrally symmetric bodies", distance_symmetry},
        {"geometry", "d_C(x,y) equals d_-C(y,x) for asymmetric polygons", distance_reflection},
        {"geometry", "reflection about the center fixes symmetric shapes", reflect_fixes_symmetric},
        {"geometry", "fatness metrics sandwich the boundary", fat_sandwich},
        {"piercing", "every object pierced and each round extends the previous set", validity_and_prefix},
        {"piercing", "center step adds at most one point, inside the object", center_step_property},
        {"piercing", "vertex step adds 0, 2^d or 3^d distinct points inside the box", [&] { return vertex_step_property(step); }},
        {"adversaries", "emitted objects avoid every placed point",
         [] {
             Outcome o = from_count(battery().placed_inside, battery().runs, "runs");
             for (const auto& s : battery().samples) o.detail += "; " + s;
             return o;
         }},
        {"adversaries", "witness lies in every emitted object",
         [] { return from_count(battery().witness_missing, battery().runs, "runs"); }},
        {"adversaries", "GSS running intersection has the promised sides",
         [] { return from_count(battery().intersection_bad, battery().intersection_total, "games"); }},
        {"adversaries", "forced points meet the construction floor",
         [] { return from_count(battery().below_floor, battery().runs, "runs"); }},
        {"adversaries", "emitted scales lie in [1, k]", [] { return from_count(battery().scale_bad, battery().runs, "objects"); }},
        {"oracle", "exact optimum never exceeds greedy", exact_below_greedy},
        {"oracle", "exact optimum equals interval greedy on 500 instances", exact_vs_interval},
        {"oracle", "exact optimum equals the dense grid on 200 planar instances", exact_vs_grid},
        {"oracle", "full adversary games have OPT 1",
         [] { return from_count(battery().opt_not_one, battery().runs, "runs"); }},
        {"bounds", "lower bounds stay below upper bounds", lb_below_ub},
        {"bounds", "general hypercube ceiling exceeds the short printed form by 2^d(2^d-1)", printed_hypercube_gap},
        {"bounds", "planar fat ceiling takes the larger of its two forms", fat2d_takes_max},
        {"duality", "x in y+C iff y in x-C on 10^4 samples", translate_biconditional},
        {"duality", "piercing and covering solutions transfer", solution_transfer},
        {"harness", "exact-OPT runs stay under the ceiling", exact_runs_under_ceiling},
        {"harness", "adversary runs meet the floor with OPT 1", adversary_runs_meet_floor},
        {"harness", "identical config and seed give identical transcripts", determinism},
        {"harness", "tolerance above the margin guard is rejected", tolerance_guard},
    };
    std::vector<PropertyResult> out;
    for (const auto& [module, name, check] : props) {
        const auto start = std::chrono::steady_clock::now();
        PropertyResult r{module, name, false, "", 0.0};
        try {
            const Outcome o = check();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace pierce
