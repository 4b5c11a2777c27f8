#include "pierce/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pierce/adversary.hpp"
#include "pierce/bounds.hpp"

namespace pierce {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
    for (const char* o : options)
        if (v == o) return true;
    return false;
}

void need(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("config: " + msg);
}

std::string fmt(double v, const char* spec = "%.10g") {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

Shape base_shape(const ScenarioConfig& c, double s, int major) {
    const Point origin = Point::zeros(c.d);
    if (c.shape == "interval") return make_interval(-s / 2, s / 2);
    if (c.shape == "hypercube") return make_box(origin, s / 2);
    if (c.shape == "ball") return make_ball(origin, s);
    return make_ellipse(origin, s, s / c.alpha, major);
}

}  // namespace

void ScenarioConfig::validate() const {
    need(d >= 1, "d must be at least 1");
    need(std::isfinite(k) && k >= 1.0, "k must be at least 1");
    need(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
    need(tol >= 0.0 && eps >= 0.0 && eps1 >= 0.0, "tol, eps and eps1 must be non-negative");
    need(one_of(shape, {"interval", "hypercube", "ball", "ellipse"}), "unknown shape '" + shape + "'");
    need(shape != "interval" || d == 1, "interval streams are 1-dimensional");
    need(shape != "ellipse" || d == 2, "ellipse streams are 2-dimensional");
    need(shape != "ball" || d >= 2, "ball streams need d >= 2");
    need(one_of(algorithm, {"center", "vertex", "naive_always_center", "random_point"}),
         "unknown algorithm '" + algorithm + "'");
    need(algorithm != "vertex" || shape == "hypercube", "the vertex algorithm needs the hypercube class");
    if (stream.kind == StreamSpec::Kind::Random) {
        need(stream.clusters >= 1, "random streams need at least one cluster");
        need(stream.spread >= 0.0, "spread must be non-negative");
        return;
    }
    const std::string& t = stream.tag;
    if (t == "interval_nest")
        need(shape == "interval", "interval_nest emits intervals");
    else if (t == "alpha_fat_nest")
        need(shape == "ellipse", "alpha_fat_nest emits 2-D ellipses");
    else if (t == "chained_gss" || t == "unit_illumination")
        need(shape == "hypercube", t + " emits hypercubes");
    else if (t == "gsr3d")
        need(shape == "ball" && d == 3, "gsr3d emits 3-D balls");
    else if (t == "gsr2d")
        need(shape == "ball" && d == 2, "gsr2d emits 2-D balls");
    else
        need(false, "unknown adversary tag '" + t + "'");
}

std::string ScenarioConfig::stream_label() const {
    if (stream.kind == StreamSpec::Kind::Adversary) return stream.tag;
    return "random_m" + std::to_string(stream.clusters);
}

std::uint64_t ScenarioConfig::seed() const {
    if (algorithm_seed) return *algorithm_seed;
    return stream.kind == StreamSpec::Kind::Random ? stream.seed : 0;
}

ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig c;
    c.id = j.value("id", c.id);
    c.d = j.value("d", c.d);
    c.shape = j.value("shape", c.shape);
    c.k = j.value("k", c.k);
    c.n = j.value("n", c.n);
    c.algorithm = j.value("algorithm", c.algorithm);
    if (j.contains("algorithm_seed")) c.algorithm_seed = j.at("algorithm_seed").get<std::uint64_t>();
    c.alpha = j.value("alpha", c.alpha);
    c.eps = j.value("eps", c.eps);
    c.eps1 = j.value("eps1", c.eps1);
    c.tol = j.value("tol", c.tol);
    c.oracle_max_n = j.value("oracle_max_n", c.oracle_max_n);
    c.output = j.value("output", c.output);
    if (j.contains("stream")) {
        const json& s = j.at("stream");
        if (s.contains("adversary")) {
            c.stream.kind = StreamSpec::Kind::Adversary;
            c.stream.tag = s.at("adversary").get<std::string>();
        } else if (s.contains("random")) {
            const json& r = s.at("random");
            c.stream.kind = StreamSpec::Kind::Random;
            c.stream.seed = r.value("seed", std::uint64_t{0});
            c.stream.clusters = r.value("clusters", std::size_t{1});
            c.stream.spread = r.value("spread", 0.0);
        } else {
            throw std::invalid_argument("config: stream needs an 'adversary' or a 'random' entry");
        }
    }
    return c;
}

json to_json(const ScenarioConfig& c) {
    json j{{"id", c.id},       {"d", c.d},          {"shape", c.shape}, {"k", c.k},
           {"n", c.n},         {"algorithm", c.algorithm},             {"alpha", c.alpha},
           {"eps", c.eps},     {"eps1", c.eps1},    {"tol", c.tol},     {"oracle_max_n", c.oracle_max_n}};
    if (c.algorithm_seed) j["algorithm_seed"] = *c.algorithm_seed;
    if (!c.output.empty()) j["output"] = c.output;
    if (c.stream.kind == StreamSpec::Kind::Adversary)
        j["stream"] = {{"adversary", c.stream.tag}};
    else
        j["stream"] = {{"random", {{"seed", c.stream.seed}, {"clusters", c.stream.clusters}, {"spread", c.stream.spread}}}};
    return j;
}

json to_json(const RunResult& r) {
    return json{{"scenario_id", r.scenario_id},
                {"d", r.d},
                {"shape", r.shape},
                {"k", r.k},
                {"algorithm", r.algorithm},
                {"stream", r.stream},
                {"n_objects", r.n_objects},
                {"alg_points", r.alg_points},
                {"opt_lower", r.opt_lower},
                {"opt_upper", r.opt_upper},
                {"opt_method", r.opt_method},
                {"ratio", number_or_null(r.ratio)},
                {"bound_lb", number_or_null(r.bound_lb)},
                {"bound_ub", number_or_null(r.bound_ub)},
                {"seed", r.seed},
                {"wall_ms", r.wall_ms},
                {"transcript_hash", r.transcript_hash},
                {"violations", r.violations},
                {"notes", r.notes},
                {"ok", r.ok()}};
}

std::vector<Shape> random_stream(const ScenarioConfig& c, std::vector<Point>* clusters, std::vector<std::size_t>* owner) {
    c.validate();
    if (c.stream.kind != StreamSpec::Kind::Random) throw std::invalid_argument("random_stream: not a random stream");
    std::mt19937_64 rng(c.stream.seed);
    const double spread = c.stream.spread > 0.0 ? c.stream.spread : 2.0 * c.k;
    std::uniform_real_distribution<double> coord(0.0, spread), logscale(0.0, std::log(c.k));
    std::uniform_int_distribution<std::size_t> pick(0, c.stream.clusters - 1);
    std::uniform_int_distribution<int> axis(0, 1);

    std::vector<Point> centers;
    for (std::size_t i = 0; i < c.stream.clusters; ++i) {
        std::vector<double> v(c.d);
        for (auto& x : v) x = coord(rng);
        centers.emplace_back(v);
    }
    std::vector<Shape> out;
    std::vector<std::size_t> who;
    for (std::size_t i = 0; i < c.n; ++i) {
        const std::size_t j = pick(rng);
        const double s = std::min(c.k, std::exp(logscale(rng)));
        const Shape base = base_shape(c, s, axis(rng));
        // Shrinking the sampled offset keeps the cluster point off the boundary.
        const Point z = 0.98 * sample_inside(base, rng);
        out.push_back(translate(base, centers[j] - z));
        who.push_back(j);
    }
    if (clusters) *clusters = std::move(centers);
    if (owner) *owner = std::move(who);
    return out;
}

double scenario_upper_bound(const ScenarioConfig& c, double k) {
    BoundParams p;
    p.k = k;
    p.d = c.d;
    if (c.algorithm == "vertex") return ub_vertex(k, c.d);
    if (c.algorithm != "center") return kNaN;
    if (c.shape == "ellipse") {
        p.alpha = c.alpha;
        return ub_center(UpperClass::Fat2d, p);
    }
    p.alpha = c.shape == "ball" ? 1.0 / std::sqrt(static_cast<double>(c.d)) : 1.0;
    return ub_center(UpperClass::AspectInfFat, p);
}

double scenario_lower_bound(const ScenarioConfig& c) {
    if (c.stream.kind != StreamSpec::Kind::Adversary) return kNaN;
    BoundParams p;
    p.k = c.k;
    p.d = c.d;
    p.alpha = c.alpha;
    p.eps = c.eps;
    p.eps1 = c.eps1;
    p.n = c.n;
    const std::string& t = c.stream.tag;
    if (t == "interval_nest") return lb(LowerClass::Interval, p);
    if (t == "alpha_fat_nest") return lb(LowerClass::Fat2d, p);
    if (t == "chained_gss") return lb(LowerClass::Hypercube, p);
    if (t == "unit_illumination") return lb(LowerClass::UnitHypercube, p);
    if (t == "gsr3d") return lb(LowerClass::Ball3d, p);
    if (t == "gsr2d") return lb(LowerClass::Ball2d, p);
    return kNaN;
}

ScenarioOutcome run_scenario(const ScenarioConfig& c) {
    c.validate();
    const auto start = std::chrono::steady_clock::now();
    ScenarioOutcome out;
    RunResult& r = out.result;
    r.scenario_id = c.id;
    r.d = c.d;
    r.shape = c.shape;
    r.k = c.k;
    r.algorithm = c.algorithm;
    r.stream = c.stream_label();
    r.seed = c.seed();
    auto& bad = r.violations;

    auto algorithm = make_algorithm(c.algorithm, c.seed(), c.tol);
    std::vector<Shape> objects;
    const bool adversarial = c.stream.kind == StreamSpec::Kind::Adversary;

    if (adversarial) {
        auto adv = make_adversary(c.stream.tag, c.d, c.k, c.eps, c.eps1, c.alpha, c.n, c.tol);
        AdversaryRun run = play(*adv, *algorithm, c.tol);
        out.detail = to_json(run, *adv);
        out.detail.erase("transcript");
        for (const auto& v : run.violations) bad.push_back("adversary: " + v);
        r.notes = run.notes;
        for (const auto& round : run.transcript.rounds) objects.push_back(round.object);
        out.transcript = std::move(run.transcript);
        if (verify_witness(objects, run.witness, c.tol)) {
            out.opt.lower = out.opt.upper = objects.empty() ? 0 : 1;
            out.opt.points = {run.witness};
            out.opt.method = OptMethod::WitnessCertified;
        } else {
            bad.push_back("witness does not pierce every emitted object");
            out.opt = greedy_piercing(objects, c.tol);
            out.opt.lower = std::max<std::size_t>(1, disjoint_lower_bound(objects));
            out.opt.method = OptMethod::Bounds;
        }
        if (c.stream.tag != "interval_nest")
            for (std::size_t i = 0; i < objects.size(); ++i) {
                const double s = scale_of(objects[i]);
                if (s < 1.0 - 1e-9 || s > c.k * (1.0 + 1e-9))
                    bad.push_back("object " + std::to_string(i) + " has scale " + fmt(s) + " outside [1, k]");
            }
    } else {
        std::vector<Point> clusters;
        std::vector<std::size_t> owner;
        objects = random_stream(c, &clusters, &owner);
        out.transcript = run_online(*algorithm, objects, c.tol);
        out.detail = json{{"clusters", points_to_json(clusters)}, {"objects", shapes_to_json(objects)}};
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (!contains(objects[i], clusters[owner[i]], c.tol))
                bad.push_back("object " + std::to_string(i) + " misses its cluster point");

        const std::size_t m = c.stream.clusters;
        if (m == 1 && !objects.empty() && verify_witness(objects, clusters[0], c.tol)) {
            out.opt.lower = out.opt.upper = 1;
            out.opt.points = {clusters[0]};
            out.opt.method = OptMethod::WitnessCertified;
        } else if (!objects.empty() && exact_supported(objects) && objects.size() <= c.oracle_max_n) {
            out.opt = exact_min_piercing(objects, c.oracle_max_n, 10'000'000, c.tol);
        } else if (!objects.empty()) {
            out.opt = greedy_piercing(objects, c.tol);
            out.opt.lower = std::max<std::size_t>(1, disjoint_lower_bound(objects));
            // The cluster points pierce everything, so OPT <= m.
            if (m < out.opt.upper) {
                out.opt.upper = m;
                out.opt.points = clusters;
            }
            out.opt.lower = std::min(out.opt.lower, out.opt.upper);
            out.opt.method = out.opt.exact() ? OptMethod::WitnessCertified : OptMethod::Bounds;
        }
    }

    if (!transcript_consistent(out.transcript, c.tol)) bad.push_back("transcript is inconsistent");
    r.n_objects = objects.size();
    r.alg_points = out.transcript.final_set.size();
    r.opt_lower = out.opt.lower;
    r.opt_upper = out.opt.upper;
    r.opt_method = method_name(out.opt.method);
    r.ratio = r.opt_lower > 0 ? static_cast<double>(r.alg_points) / static_cast<double>(r.opt_lower) : kNaN;
    r.transcript_hash = transcript_hash(out.transcript);

    // Bounds use the scale ratio actually present when it exceeds the configured k
    // (only the unbounded interval construction does that).
    double k_eff = c.k;
    if (!objects.empty()) {
        double lo = scale_of(objects[0]), hi = lo;
        for (const auto& o : objects) {
            lo = std::min(lo, scale_of(o));
            hi = std::max(hi, scale_of(o));
        }
        k_eff = std::max(k_eff, hi / lo);
    }
    r.bound_ub = scenario_upper_bound(c, k_eff);
    r.bound_lb = scenario_lower_bound(c);

    if (r.alg_points < r.opt_lower) bad.push_back("alg_points below opt_lower");
    if (adversarial && !std::isnan(r.bound_lb) && static_cast<double>(r.alg_points) < r.bound_lb)
        bad.push_back("alg_points " + std::to_string(r.alg_points) + " below the construction floor " + fmt(r.bound_lb));
    if (out.opt.exact() && r.opt_lower > 0 && !std::isnan(r.bound_ub) && r.ratio > r.bound_ub * (1.0 + 1e-12))
        bad.push_back("ratio " + fmt(r.ratio) + " exceeds the ceiling " + fmt(r.bound_ub));

    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<ScenarioConfig> expand_grid(const json& j) {
    std::vector<ScenarioConfig> out;
    if (j.is_array()) {
        for (const auto& s : j) out.push_back(config_from_json(s));
        return out;
    }
    if (!j.is_object()) throw std::invalid_argument("grid: expected an object or an array");
    const json base = j.value("base", json::object());
    if (j.contains("scenarios"))
        for (const auto& s : j.at("scenarios")) {
            json merged = base;
            merged.merge_patch(s);
            out.push_back(config_from_json(merged));
        }
    if (j.contains("grid")) {
        std::vector<std::pair<std::string, json>> axes;
        for (const auto& [key, values] : j.at("grid").items()) {
            if (!values.is_array() || values.empty()) throw std::invalid_argument("grid: '" + key + "' needs a non-empty list");
            axes.emplace_back(key, values);
        }
        std::vector<std::size_t> at(axes.size(), 0);
        for (;;) {
            json cfg = base;
            std::string id = base.value("id", std::string("grid"));
            for (std::size_t a = 0; a < axes.size(); ++a) {
                const json& v = axes[a].second[at[a]];
                std::string pointer = "/" + axes[a].first;
                for (auto& ch : pointer)
                    if (ch == '.') ch = '/';
                cfg[json::json_pointer(pointer)] = v;
                const std::string leaf = axes[a].first.substr(axes[a].first.rfind('.') + 1);
                id += "/" + leaf + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
            }
            cfg["id"] = id;
            out.push_back(config_from_json(cfg));
            std::size_t a = 0;
            while (a < axes.size() && ++at[a] == axes[a].second.size()) at[a++] = 0;
            if (a == axes.size()) break;
        }
    }
    if (!j.contains("scenarios") && !j.contains("grid")) out.push_back(config_from_json(j));
    return out;
}

std::vector<RunResult> sweep(const std::vector<ScenarioConfig>& configs, unsigned threads) {
    if (configs.empty()) throw std::invalid_argument("sweep: no scenarios");
    std::vector<RunResult> results(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            const ScenarioConfig& c = configs[i];
            try {
                results[i] = run_scenario(c).result;
            } catch (const std::exception& e) {
                RunResult& r = results[i];
                r.scenario_id = c.id;
                r.d = c.d;
                r.shape = c.shape;
                r.k = c.k;
                r.algorithm = c.algorithm;
                r.stream = c.stream_label();
                r.seed = c.seed();
                r.ratio = r.bound_lb = r.bound_ub = kNaN;
                r.violations.push_back(std::string("error: ") + e.what());
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, configs.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return results;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {"scenario_id", "d",          "shape",     "k",        "algorithm",
                                                  "stream",      "n_objects",  "alg_points", "opt_lower", "opt_upper",
                                                  "ratio",       "bound_lb",   "bound_ub",  "seed",     "wall_ms"};
    return cols;
}

std::string csv_header() {
    std::string out;
    for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string csv_row(const RunResult& r) {
    std::ostringstream s;
    s << r.scenario_id << ',' << r.d << ',' << r.shape << ',' << fmt(r.k) << ',' << r.algorithm << ',' << r.stream << ','
      << r.n_objects << ',' << r.alg_points << ',' << r.opt_lower << ',' << r.opt_upper << ',' << fmt(r.ratio) << ','
      << fmt(r.bound_lb) << ',' << fmt(r.bound_ub) << ',' << r.seed << ',' << fmt(r.wall_ms, "%.3f");
    return s.str();
}

void write_csv(std::ostream& out, const std::vector<RunResult>& rows) {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
}

}  // namespace pierce
