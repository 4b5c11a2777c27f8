// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pierce/adversary.hpp"
#include "pierce/bounds.hpp"
#include "pierce/duality.hpp"
#include "pierce/harness.hpp"
#include "pierce/oracle.hpp"

using namespace pierce;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::vector<Shape> objects_of(const GameTranscript& t) {
    std::vector<Shape> out;
    for (const auto& r : t.rounds) out.push_back(r.object);
    return out;
}

ScenarioConfig random_cfg(const std::string& shape, std::size_t d, double k, std::size_t m, std::size_t n,
                          std::uint64_t seed, const std::string& alg, double alpha = 1.0) {
    ScenarioConfig c;
    c.id = "acceptance";
    c.shape = shape;
    c.d = d;
    c.k = k;
    c.n = n;
    c.algorithm = alg;
    c.alpha = alpha;
    c.stream.seed = seed;
    c.stream.clusters = m;
    return c;
}

Verdict interval_nest() {
    ScenarioConfig c;
    c.shape = "interval";
    c.d = 1;
    c.n = 50;
    c.stream.kind = StreamSpec::Kind::Adversary;
    c.stream.tag = "interval_nest";
    const auto r = run_scenario(c).result;
    std::ostringstream s;
    s << "alg_points=" << r.alg_points << " opt=" << r.opt_lower << "/" << r.opt_upper << " (" << r.opt_method
      << ") ratio=" << r.ratio;
    return {r.ok() && r.alg_points == 50 && r.opt_lower == 1 && r.opt_upper == 1 && r.opt_method == "witness_certified" &&
                r.ratio == 50.0,
            s.str()};
}

// Per (d, k) cell: Center, Vertex, and the random placer with seeds 0..19.
Verdict chained_hypercubes(double& worst_cell_s) {
    std::size_t runs = 0, short_runs = 0, unforced_rounds = 0, opt_bad = 0, adv_bad = 0;
    std::ostringstream s;
    for (std::size_t d = 1; d <= 3; ++d)
        for (double k : {4.0, 8.0, 16.0}) {
            const auto start = std::chrono::steady_clock::now();
            const double floor = d * std::floor(std::log2(k / 1.02) + 1e-9) + std::ldexp(1.0, static_cast<int>(d));
            std::size_t min_points = static_cast<std::size_t>(-1);
            std::vector<std::pair<std::string, std::uint64_t>> algs = {{"center", 0}, {"vertex", 0}};
            for (std::uint64_t seed = 0; seed < 20; ++seed) algs.emplace_back("random_point", seed);
            for (const auto& [name, seed] : algs) {
                ++runs;
                ChainedHypercubeAdversary adv(d, k, 0.01);
                auto alg = make_algorithm(name, seed);
                const auto run = play(adv, *alg);
                if (!run.ok()) ++adv_bad;
                for (const auto& round : run.transcript.rounds)
                    if (round.pierced_on_arrival || round.points_added.empty()) ++unforced_rounds;
                if (static_cast<double>(run.alg_points()) < floor) ++short_runs;
                min_points = std::min(min_points, run.alg_points());
                const auto objs = objects_of(run.transcript);
                bool opt_one = verify_witness(objs, run.witness);
                if (opt_one && objs.size() <= 18) opt_one = exact_min_piercing(objs).upper == 1;
                if (!opt_one) ++opt_bad;
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            worst_cell_s = std::max(worst_cell_s, secs);
            s << " d" << d << "k" << k << ":" << min_points << ">=" << floor;
        }
    std::ostringstream head;
    head << runs << " runs, " << short_runs << " below floor, " << unforced_rounds << " unforced rounds, " << opt_bad
         << " without OPT 1, " << adv_bad << " with adversary violations; min points" << s.str();
    return {short_runs == 0 && unforced_rounds == 0 && opt_bad == 0 && adv_bad == 0, head.str()};
}

Verdict vertex_ceiling() {
    std::size_t over = 0, violations = 0, exact = 0, multi = 0;
    const double ks[] = {2.0, 8.0};
    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::size_t d = 1 + s % 3;
        const double k = ks[(s / 3) % 2];
        const auto r = run_scenario(random_cfg("hypercube", d, k, 1, 40, s, "vertex")).result;
        if (static_cast<double>(r.alg_points) > ub_vertex(k, d)) ++over;
        if (!r.ok()) ++violations;
    }
    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::size_t d = 1 + s % 3;
        const double k = ks[(s / 3) % 2];
        const auto r = run_scenario(random_cfg("hypercube", d, k, 2 + s % 3, 15, 1000 + s, "vertex")).result;
        ++multi;
        if (r.opt_lower == r.opt_upper) {
            ++exact;
            if (r.ratio > ub_vertex(k, d)) ++over;
        }
        if (!r.ok()) ++violations;
    }
    std::ostringstream o;
    o << "200 single-cluster + " << multi << " multi-cluster streams (" << exact << " exact), " << over
      << " over the ceiling, " << violations << " runs with violations";
    return {over == 0 && violations == 0 && exact == multi, o.str()};
}

Verdict center_aspect_ceiling() {
    std::size_t over = 0, violations = 0, exact = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::size_t d = 2 + s % 2;
        const double k = (s / 2) % 2 == 0 ? 2.0 : 4.0;
        const bool ball = (s / 4) % 2 == 1;
        // 3-D balls have no exact oracle; a single cluster certifies OPT = 1 by witness.
        const std::size_t m = ball && d == 3 ? 1 : 1 + s % 3;
        const auto c = random_cfg(ball ? "ball" : "hypercube", d, k, m, 15, 2000 + s, "center");
        const auto r = run_scenario(c).result;
        BoundParams p;
        p.k = k;
        p.d = d;
        p.alpha = ball ? 1.0 / std::sqrt(static_cast<double>(d)) : 1.0;
        const double ceiling = ub_center(UpperClass::AspectInfFat, p);
        if (r.opt_lower == r.opt_upper) {
            ++exact;
            if (r.ratio > ceiling) ++over;
        }
        if (!r.ok()) ++violations;
    }
    std::ostringstream o;
    o << "200 streams (" << exact << " exact), " << over << " over the ceiling, " << violations << " runs with violations";
    return {over == 0 && violations == 0 && exact == 200, o.str()};
}

Verdict fat_planar() {
    std::size_t over = 0, violations = 0, exact = 0, total = 0;
    for (double alpha : {0.5, 1.0})
        for (std::uint64_t s = 0; s < 50; ++s, ++total) {
            const auto r = run_scenario(random_cfg("ellipse", 2, 4, 1 + s % 3, 15, 3000 + s, "center", alpha)).result;
            BoundParams p;
            p.k = 4;
            p.d = 2;
            p.alpha = alpha;
            if (r.opt_lower == r.opt_upper) {
                ++exact;
                if (r.ratio > ub_center(UpperClass::Fat2d, p)) ++over;
            }
            if (!r.ok()) ++violations;
        }
    AlphaFatNestAdversary adv(0.5, 64, 0.01);
    AlgorithmCenter center;
    const auto run = play(adv, center);
    const auto objs = objects_of(run.transcript);
    const bool opt_one = verify_witness(objs, run.witness) && exact_min_piercing(objs).upper == 1;
    std::ostringstream o;
    o << total << " ellipse streams (" << exact << " exact), " << over << " over the ceiling, " << violations
      << " with violations; nest forced " << run.forced_rounds() << ">=3, OPT 1 " << (opt_one ? "yes" : "no");
    return {over == 0 && violations == 0 && exact == total && run.ok() && run.forced_rounds() >= 3 && opt_one, o.str()};
}

Verdict ball_games() {
    std::size_t short_runs = 0, cert_bad = 0, opt_bad = 0, adv_bad = 0, runs = 0;
    std::size_t forced3 = 0, forced2 = 0;
    double worst_slack = -1e300;
    for (std::size_t d : {3u, 2u}) {
        const double floor = d == 3 ? 10 : 9;
        std::vector<std::pair<std::string, std::uint64_t>> algs = {{"center", 0}};
        for (std::uint64_t seed = 0; seed < 20; ++seed) algs.emplace_back("random_point", seed);
        for (const auto& [name, seed] : algs) {
            ++runs;
            BallGameAdversary adv(d, 64, 0.01);
            auto alg = make_algorithm(name, seed);
            const auto run = play(adv, *alg);
            if (!run.ok()) ++adv_bad;
            if (static_cast<double>(run.forced_rounds()) < floor) ++short_runs;
            if (name == "center") (d == 3 ? forced3 : forced2) = run.forced_rounds();
            if (!verify_witness(objects_of(run.transcript), run.witness)) ++opt_bad;
            for (const auto& c : adv.certificates()) {
                const double ratio = d == 3 ? (3 + 0.01) / (4 + 0.01) : (7.0 / 3 + 0.01) / (8.0 / 3 + 0.01);
                const double slack = c.max_center_distance - c.r * ratio;
                worst_slack = std::max(worst_slack, slack);
                if (slack > 1e-9 || !c.contained || !c.empty) ++cert_bad;
            }
        }
    }
    std::ostringstream o;
    o << runs << " runs; Center forced " << forced3 << ">=10 (3-D), " << forced2 << ">=9 (2-D); " << short_runs
      << " below floor, " << cert_bad << " failed certificates (worst d(c,c_j) - bound = " << worst_slack << "), "
      << opt_bad << " without witness, " << adv_bad << " with adversary violations";
    return {short_runs == 0 && cert_bad == 0 && opt_bad == 0 && adv_bad == 0, o.str()};
}

Verdict illumination() {
    std::ostringstream o;
    bool ok = true;
    for (std::size_t d : {2u, 3u}) {
        UnitHypercubeIllumination adv(d);
        AlgorithmCenter alg;
        const auto run = play(adv, alg);
        const auto objs = objects_of(run.transcript);
        const bool shared = verify_witness(objs, run.witness);
        const bool full = run.transcript.rounds.size() == (std::size_t{1} << d) && run.forced_rounds() == objs.size();
        ok = ok && run.ok() && shared && full;
        o << (d == 2 ? "" : "; ") << "d=" << d << ": " << run.forced_rounds() << " forced rounds, witness "
          << (shared ? "shared" : "missing");
    }
    return {ok, o.str()};
}

Verdict duality() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-3, 3);
    const std::vector<Shape> bodies = {make_ball({0, 0}, 1), make_box({0, 0}, 1), make_polygon({{-1, -1}, {2, -1}, {-1, 2}})};
    std::size_t checked = 0, bad = 0, redrawn = 0;
    while (checked < 10000) {
        const Shape& c = bodies[checked % 3];
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        if (std::abs(boundary_margin(c, x, y)) <= 10 * kDefaultTol) {
            ++redrawn;
            continue;
        }
        ++checked;
        if (!equivalence_check(c, x, y)) ++bad;
    }
    std::ostringstream o;
    o << checked << " checks over disk/square/triangle, " << bad << " disagreements, " << redrawn << " redrawn in the band";
    return {bad == 0, o.str()};
}

Verdict oracle_audit() {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> pos(0, 4), rad(0.5, 1.5), ipos(0, 20), ilen(0.5, 6);
    std::uniform_int_distribution<int> n8(1, 8), n12(1, 12), kind(0, 1), axis(0, 1);
    std::size_t planar_bad = 0, interval_bad = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<Shape> objs;
        const int n = n8(rng);
        for (int i = 0; i < n; ++i) {
            const Point c{pos(rng), pos(rng)};
            const double a = rad(rng);
            objs.push_back(kind(rng) == 0 ? make_ball(c, a) : make_ellipse(c, a, a * (1 + rad(rng)), axis(rng)));
        }
        const auto e = exact_min_piercing(objs);
        const auto g = grid_brute_force(objs, 0.01);
        if (!e.exact() || !g.exact() || e.upper != g.upper) ++planar_bad;
    }
    for (int t = 0; t < 500; ++t) {
        std::vector<Shape> objs;
        const int n = n12(rng);
        for (int i = 0; i < n; ++i) {
            const double lo = ipos(rng);
            objs.push_back(make_interval(lo, lo + ilen(rng)));
        }
        const auto e = exact_min_piercing(objs);
        if (!e.exact() || e.upper != interval_opt(objs).upper) ++interval_bad;
    }
    std::ostringstream o;
    o << planar_bad << "/200 planar mismatches vs the 0.01 grid, " << interval_bad << "/500 interval mismatches";
    return {planar_bad == 0 && interval_bad == 0, o.str()};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](const char* name, double limit_s, const std::function<Verdict(double&)>& f) {
        const auto start = std::chrono::steady_clock::now();
        double timed = -1;  // per-cell time when the criterion budgets cells separately
        Verdict v;
        try {
            v = f(timed);
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double measured = timed >= 0 ? timed : total;
        const bool in_time = limit_s <= 0 || measured < limit_s;
        const bool pass = v.pass && in_time;
        if (!pass) ++failed;
        char budget[64] = "";
        if (limit_s > 0) std::snprintf(budget, sizeof budget, " < %.0fs%s", limit_s, in_time ? "" : " (over budget)");
        std::printf("%s  %-34s %s | %.2fs%s%s\n", pass ? "PASS" : "FAIL", name, v.detail.c_str(), measured,
                    timed >= 0 ? " worst cell" : "", budget);
        std::fflush(stdout);
    };
    auto plain = [](Verdict (*f)()) { return [f](double&) { return f(); }; };

    report("interval nest vs center", 1, plain(interval_nest));
    report("chained hypercube games", 5, chained_hypercubes);
    report("vertex ceiling on hypercubes", 30, plain(vertex_ceiling));
    report("center ceiling, aspect-inf fat", 60, plain(center_aspect_ceiling));
    report("fat planar objects", 30, plain(fat_planar));
    report("chained ball games", 5, plain(ball_games));
    report("unit hypercube illumination", 10, plain(illumination));
    report("piercing/covering duality", 0, plain(duality));
    report("oracle audit", 0, plain(oracle_audit));
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
