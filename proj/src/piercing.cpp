#include "pierce/piercing.hpp"

#include <cmath>
#include <stdexcept>

namespace pierce {

std::vector<double> PiercingSet::key(const Point& p) {
    std::vector<double> k(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double r = std::round(p[i] * 1e12) / 1e12;
        k[i] = r == 0.0 ? 0.0 : r;  // fold -0.0 into 0.0
    }
    return k;
}

bool PiercingSet::add(const Point& p) {
    if (!points_.empty() && p.dim() != points_.front().dim()) {
        throw std::invalid_argument("piercing set: dimension mismatch");
    }
    if (!keys_.insert(key(p)).second) return false;
    points_.push_back(p);
    return true;
}

bool PiercingSet::has(const Point& p) const { return keys_.count(key(p)) > 0; }

bool PiercingSet::pierces(const Shape& s, double tol) const {
    for (const auto& p : points_) {
        if (contains(s, p, tol)) return true;
    }
    return false;
}

std::vector<Point> center_step(const PiercingSet& state, const Shape& object, double tol) {
    if (state.pierces(object, tol)) return {};
    return {shape_center(object)};
}

std::vector<Point> vertex_step(const PiercingSet& state, const Shape& object, double tol) {
    const auto* box = std::get_if<AxisBox>(&object);
    if (box == nullptr) throw std::invalid_argument("Algorithm-Vertex only accepts axis-parallel hypercubes");
    if (state.pierces(object, tol)) return {};

    const std::size_t d = box->center.dim();
    const double side = 2.0 * box->half_side;
    const bool unit = std::abs(side - 1.0) <= tol;
    // offsets per coordinate: vertices of the cube, or the half-grid {-h, 0, h}
    const std::vector<double> offsets =
        unit ? std::vector<double>{-box->half_side, box->half_side}
             : std::vector<double>{-box->half_side, 0.0, box->half_side};

    std::vector<Point> out;
    std::vector<std::size_t> digit(d, 0);
    while (true) {
        std::vector<double> c(d);
        for (std::size_t j = 0; j < d; ++j) c[j] = box->center[j] + offsets[digit[j]];
        Point p(std::move(c));
        if (!state.has(p)) out.push_back(std::move(p));
        std::size_t j = 0;
        while (j < d && ++digit[j] == offsets.size()) digit[j++] = 0;
        if (j == d) break;
    }
    return out;
}

Point sample_inside(const Shape& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (const auto* i = std::get_if<Interval>(&s)) return Point{i->lo + unit(rng) * (i->hi - i->lo)};
    if (const auto* b = std::get_if<AxisBox>(&s)) {
        std::vector<double> c(b->center.dim());
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = b->center[j] + (2.0 * unit(rng) - 1.0) * b->half_side;
        return Point(std::move(c));
    }
    if (const auto* b = std::get_if<Ball>(&s)) {
        std::normal_distribution<double> gauss;
        const std::size_t d = b->center.dim();
        std::vector<double> dir(d);
        double n = 0.0;
        do {
            n = 0.0;
            for (auto& x : dir) {
                x = gauss(rng);
                n += x * x;
            }
        } while (n == 0.0);
        n = std::sqrt(n);
        const double r = b->radius * std::pow(unit(rng), 1.0 / static_cast<double>(d));
        std::vector<double> c(d);
        for (std::size_t j = 0; j < d; ++j) c[j] = b->center[j] + r * dir[j] / n;
        return Point(std::move(c));
    }
    if (const auto* e = std::get_if<AxisEllipse2D>(&s)) {
        const double ax = e->major_axis == 0 ? e->semi_major : e->semi_minor;
        const double ay = e->major_axis == 0 ? e->semi_minor : e->semi_major;
        const double r = std::sqrt(unit(rng));
        const double t = 2.0 * M_PI * unit(rng);
        return Point{e->center[0] + ax * r * std::cos(t), e->center[1] + ay * r * std::sin(t)};
    }
    const HyperRect bb = bounding_box(s);
    while (true) {
        Point p{bb.lo[0] + unit(rng) * bb.side(0), bb.lo[1] + unit(rng) * bb.side(1)};
        if (contains(s, p, 0.0)) return p;
    }
}

std::vector<Point> RandomPointPlacer::step(const PiercingSet& state, const Shape& object) {
    if (state.pierces(object, tol_)) return {};
    return {sample_inside(object, rng_)};
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, std::uint64_t seed, double tol) {
    if (name == "center") return std::make_unique<AlgorithmCenter>(tol);
    if (name == "vertex") return std::make_unique<AlgorithmVertex>(tol);
    if (name == "naive_always_center") return std::make_unique<NaiveAlwaysCenter>();
    if (name == "random_point") return std::make_unique<RandomPointPlacer>(seed, tol);
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const Round& OnlineGame::present(const Shape& object) {
    const std::size_t d = dimension(object);
    if (transcript_.rounds.empty()) {
        dim_ = d;
    } else if (d != dim_) {
        throw std::invalid_argument("stream dimension changed mid-game: expected " + std::to_string(dim_) + ", got " +
                                    std::to_string(d));
    }
    Round round;
    round.object = object;
    round.pierced_on_arrival = transcript_.final_set.pierces(object, tol_);
    for (auto& p : algorithm_.step(transcript_.final_set, object)) {
        if (p.dim() != d) throw std::logic_error(algorithm_.name() + " returned a point of the wrong dimension");
        if (transcript_.final_set.add(p)) round.points_added.push_back(std::move(p));
    }
    if (!transcript_.final_set.pierces(object, tol_)) {
        throw std::logic_error(algorithm_.name() + " left an object unpierced");
    }
    transcript_.rounds.push_back(std::move(round));
    return transcript_.rounds.back();
}

GameTranscript run_online(OnlineAlgorithm& algorithm, std::span<const Shape> stream, double tol) {
    OnlineGame game(algorithm, tol);
    for (const auto& s : stream) game.present(s);
    return game.take_transcript();
}

json to_json(const GameTranscript& t) {
    json rounds = json::array();
    for (const auto& r : t.rounds) {
        json added = json::array();
        for (const auto& p : r.points_added) added.push_back(to_json(p));
        rounds.push_back(json{{"object", to_json(r.object)}, {"pierced_on_arrival", r.pierced_on_arrival}, {"points_added", added}});
    }
    json fin = json::array();
    for (const auto& p : t.final_set.points()) fin.push_back(to_json(p));
    return json{{"rounds", rounds}, {"final_set", fin}};
}

bool transcript_consistent(const GameTranscript& t, double tol) {
    const auto final_points = t.final_set.points();
    std::size_t cursor = 0;
    for (const auto& r : t.rounds) {
        for (const auto& p : r.points_added) {
            if (cursor >= final_points.size() || !(final_points[cursor] == p)) return false;
            ++cursor;
        }
        bool pierced = false;
        for (std::size_t i = 0; i < cursor && !pierced; ++i) pierced = contains(r.object, final_points[i], tol);
        if (!pierced) return false;
    }
    return cursor == final_points.size();
}

std::uint64_t transcript_hash(const GameTranscript& t) {
    const std::string s = to_json(t).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace pierce
