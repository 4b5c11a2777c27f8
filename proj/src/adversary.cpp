#include "pierce/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pierce {

namespace {

// First point of `added` that lies in `object`; the algorithm must have placed one.
const Point& answer_in(std::span<const Point> added, const Shape& object, double tol) {
    for (const auto& p : added) {
        if (contains(object, p, tol)) return p;
    }
    throw std::logic_error("adversary: no point of the last answer lies in the last object");
}

bool pierced_by_any(const Shape& s, std::span<const Point> points, double tol) {
    return std::any_of(points.begin(), points.end(), [&](const Point& p) { return contains(s, p, tol); });
}

std::optional<HyperRect> intersect(const std::optional<HyperRect>& a, const HyperRect& b) {
    if (!a) return b;
    const HyperRect both[2] = {*a, b};
    return box_common_intersection(both);
}

Shape cube_at(const Point& center, double side) { return make_box(center, side / 2.0); }

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(10);
    o << x;
    return o.str();
}

// Spacing of doubles around x.
double spacing(double x) {
    const double a = std::abs(x);
    return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

}  // namespace

void require_margin(double eps, double tol, const char* what) {
    if (!(eps > 1e3 * tol)) {
        throw std::invalid_argument(std::string(what) + " = " + fmt(eps) + " must exceed 1e3 * tol = " + fmt(1e3 * tol));
    }
}

// ---------------------------------------------------------------------------

IntervalNestAdversary::IntervalNestAdversary(std::size_t n, double delta, double tol) : n_(n), delta_(delta) {
    if (n == 0) throw std::invalid_argument("interval_nest: n must be positive");
    if (n > 1000) throw std::invalid_argument("interval_nest: n > 1000 overflows the starter length");
    require_margin(delta, tol, "interval_nest delta");
}

Interval IntervalNestAdversary::follow(const Interval& current, std::span<const Point> points, double delta) {
    std::vector<double> xs;
    for (const auto& p : points) {
        if (p[0] >= current.lo && p[0] <= current.hi) xs.push_back(p[0]);
    }
    if (xs.empty()) throw std::logic_error("interval_nest: last interval holds no point (algorithm cheated)");
    std::sort(xs.begin(), xs.end());

    // Near 2^(n+1) the grid of doubles can be coarser than delta; keep the margin representable.
    auto margin = [delta](double x) { return std::max(delta, 2.0 * spacing(x)); };

    std::optional<Interval> best;
    auto consider = [&](double a, bool a_is_point, double b, bool b_is_point) {
        const double lo = a_is_point ? a + margin(a) : a;
        const double hi = b_is_point ? b - margin(b) : b;
        if (!(lo < hi)) return;
        if (!best || hi - lo >= best->hi - best->lo) best = Interval{lo, hi};  // ">=": ties go right
    };
    consider(current.lo, false, xs.front(), true);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) consider(xs[i], true, xs[i + 1], true);
    consider(xs.back(), true, current.hi, false);
    if (!best) throw std::logic_error("interval_nest: no point-free part left");
    return *best;
}

std::optional<RoundDemand> IntervalNestAdversary::next(std::span<const Point> placed, std::span<const Point> last_added) {
    if (emitted_ == n_) return std::nullopt;
    if (!current_) {
        current_ = Interval{0.0, std::ldexp(1.0, static_cast<int>(n_) + 1)};
    } else {
        const Shape prev = *current_;
        answer_in(last_added, prev, 0.0);
        current_ = follow(*current_, placed, delta_);
        if (current_->hi - current_->lo < 1.0) fail("interval_nest: interval shorter than 1 at round " + std::to_string(emitted_ + 1));
    }
    ++emitted_;
    return RoundDemand{make_interval(current_->lo, current_->hi), true};
}

Point IntervalNestAdversary::witness() const {
    if (!current_) return Point{0.0};
    return Point{current_->lo + (current_->hi - current_->lo) / 2.0};
}

// ---------------------------------------------------------------------------

AlphaFatNestAdversary::AlphaFatNestAdversary(double alpha, double k, double eps, double tol)
    : alpha_(alpha), k_(k), eps_(eps), rounds_(0) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha_fat_nest: alpha must lie in (0, 1]");
    if (!(k > 2.0 / alpha)) throw std::invalid_argument("alpha_fat_nest: requires k > 2/alpha");
    require_margin(eps, tol, "alpha_fat_nest eps");
    while (width_of_round(rounds_ + 1) >= 1.0) ++rounds_;
}

double AlphaFatNestAdversary::width_of_round(std::size_t i) const {
    return k_ * std::pow(alpha_ / (2.0 + eps_), static_cast<double>(i) - 1.0);
}

std::optional<RoundDemand> AlphaFatNestAdversary::next(std::span<const Point>, std::span<const Point> last_added) {
    if (emitted_ == rounds_) return std::nullopt;
    if (emitted_ > 0) {
        const double w = width_of_round(emitted_);
        const Shape prev = make_ellipse(center_, w, w / alpha_);
        const Point& p = answer_in(last_added, prev, kDefaultTol);
        const double shift = p[0] <= center_[0] ? w / 2.0 : -w / 2.0;
        center_ = Point{center_[0] + shift, center_[1]};

        // nested-ness of the new ellipse, by boundary sampling
        const double wn = width_of_round(emitted_ + 1);
        for (int t = 0; t < 720; ++t) {
            const double a = 2.0 * M_PI * t / 720.0;
            const Point q{center_[0] + wn * std::cos(a), center_[1] + wn / alpha_ * std::sin(a)};
            if (!contains(prev, q, 1e-9 * w)) {
                fail("alpha_fat_nest: round " + std::to_string(emitted_ + 1) + " ellipse leaves its predecessor");
                break;
            }
        }
    }
    ++emitted_;
    const double w = width_of_round(emitted_);
    return RoundDemand{make_ellipse(center_, w, w / alpha_), true};
}

// ---------------------------------------------------------------------------

GssGame::GssGame(Point origin, double r, double eps)
    : origin_(std::move(origin)), r_(r), eps_(eps), sign_(origin_.dim(), 0) {}

Point GssGame::shifted_center(const std::vector<int>& signs) const {
    Point c = origin_;
    for (std::size_t j = 0; j < dim(); ++j) c[j] += signs[j] * (r_ / 2.0 + eps_);
    return c;
}

int GssGame::sign_for(const Point& p, std::size_t axis) const { return p[axis] < origin_[axis] ? +1 : -1; }

Shape GssGame::cube_for(const std::vector<int>& signs) const { return cube_at(shifted_center(signs), r_); }

Shape GssGame::planned() const {
    if (finished() || axes_.size() != boxes_.size()) throw std::logic_error("GSS: no box is due");
    return cube_at(shifted_center(sign_), r_);
}

Shape GssGame::planned_after(const Point& p, std::size_t axis) const {
    if (axes_.size() + 1 >= dim() + 1 || sign_[axis] != 0) throw std::logic_error("GSS: axis already used");
    std::vector<int> signs = sign_;
    signs[axis] = sign_for(p, axis);
    return cube_at(shifted_center(signs), r_);
}

void GssGame::record_emitted(const Shape& box) {
    boxes_.push_back(bounding_box(box));
    last_ = box;
}

std::vector<std::size_t> GssGame::unused_axes() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (sign_[j] == 0) out.push_back(j);
    }
    return out;
}

void GssGame::observe(const Point& p) {
    const auto free = unused_axes();
    if (free.empty()) throw std::logic_error("GSS: unexpected observation");
    observe(p, free.front());
}

void GssGame::observe(const Point& p, std::size_t axis) {
    if (axis >= dim() || sign_[axis] != 0 || boxes_.size() != axes_.size() + 1) {
        throw std::logic_error("GSS: unexpected observation");
    }
    sign_[axis] = sign_for(p, axis);
    axes_.push_back(axis);
    answers_.push_back(p);
}

HyperRect GssGame::running_intersection() const {
    auto q = box_common_intersection(boxes_);
    if (!q) throw std::logic_error("GSS: running intersection is empty");
    return *q;
}

std::vector<double> GssGame::promised_sides() const {
    std::vector<double> sides(dim(), r_);
    for (std::size_t i = 0; i + 1 < boxes_.size(); ++i) sides[axes_[i]] = r_ / 2.0 - eps_;
    return sides;
}

HyperRect GssGame::empty_cube() const {
    if (!finished()) throw std::logic_error("GSS: game not finished");
    HyperRect e;
    for (std::size_t j = 0; j < dim(); ++j) {
        const double o = origin_[j];
        if (sign_[j] > 0) {
            e.lo.push_back(o + eps_);
            e.hi.push_back(o + r_ / 2.0);
        } else {
            e.lo.push_back(o - r_ / 2.0);
            e.hi.push_back(o - eps_);
        }
    }
    return e;
}

// ---------------------------------------------------------------------------

std::optional<Point> illumination_next_center(std::span<const Point> centers, std::span<const Point> placed,
                                              const HyperRect& container, double tol) {
    if (centers.empty()) throw std::invalid_argument("illumination: needs at least one center");
    const std::size_t d = centers.front().dim();
    std::vector<double> lo(d), hi(d), mid(d);
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = hi[j] = centers.front()[j];
        for (const auto& c : centers) {
            lo[j] = std::min(lo[j], c[j]);
            hi[j] = std::max(hi[j], c[j]);
        }
        mid[j] = (lo[j] + hi[j]) / 2.0;
        margin = std::min(margin, 1.0 - (hi[j] - lo[j]));
    }
    if (margin <= tol) return std::nullopt;

    const double clearance = 0.5 + 1e3 * tol;  // L-infinity gap kept to every placed point
    const double reach = 0.5 + (1.0 + margin) / 2.0 + 1e3 * tol;
    std::vector<const Point*> near;
    for (const auto& p : placed) {
        if (distance_inf(p, Point(mid)) <= reach) near.push_back(&p);
    }

    auto score_of = [&](const std::vector<double>& c) -> double {
        for (const Point* p : near) {
            double gap = 0.0;
            for (std::size_t j = 0; j < d; ++j) gap = std::max(gap, std::abs(c[j] - (*p)[j]));
            if (gap <= clearance) return -1.0;
        }
        double score = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < d; ++j) {
            const double range = std::max(hi[j], c[j]) - std::min(lo[j], c[j]);
            if (range > 1.0 - tol) return -1.0;
            const double overlap = std::min(container.hi[j], c[j] + 0.5) - std::max(container.lo[j], c[j] - 0.5);
            if (overlap <= 1e3 * tol) return -1.0;
            score = std::min({score, 1.0 - range, overlap});
        }
        return score;
    };

    // Exhaustive scan of a grid over [from_j, from_j + width], `steps` cells per axis.
    auto scan = [&](const std::vector<double>& from, double width, std::size_t steps) -> std::optional<Point> {
        std::optional<std::vector<double>> best;
        double best_score = 0.0;
        std::vector<std::size_t> digit(d, 0);
        std::vector<double> c(d);
        while (true) {
            for (std::size_t j = 0; j < d; ++j) c[j] = from[j] + width * static_cast<double>(digit[j]) / static_cast<double>(steps);
            const double s = score_of(c);
            if (s > best_score) {
                best_score = s;
                best = c;
            }
            std::size_t j = 0;
            while (j < d && ++digit[j] == steps + 1) digit[j++] = 0;
            if (j == d) break;
        }
        if (!best) return std::nullopt;
        return Point(*best);
    };

    // Grid pitch margin/4 over the (1 + margin)-neighborhood, coarsened if the grid would be huge.
    const double width = 1.0 + margin;
    std::size_t steps = static_cast<std::size_t>(std::ceil(width / (margin / 4.0)));
    const double cap = std::pow(2.0e6, 1.0 / static_cast<double>(d));
    steps = std::max<std::size_t>(2, std::min<std::size_t>(steps, static_cast<std::size_t>(cap)));
    std::vector<double> from(d);
    for (std::size_t j = 0; j < d; ++j) from[j] = mid[j] - width / 2.0;
    if (auto c = scan(from, width, steps)) return c;

    // Fallback: the whole region of centers that keep every range below 1.
    std::vector<double> flo(d);
    for (std::size_t j = 0; j < d; ++j) flo[j] = hi[j] - 1.0;
    std::optional<Point> out;
    double best_score = 0.0;
    const std::size_t fsteps = std::max<std::size_t>(2, static_cast<std::size_t>(std::pow(2.0e6, 1.0 / static_cast<double>(d))));
    std::vector<std::size_t> digit(d, 0);
    std::vector<double> c(d);
    while (true) {
        for (std::size_t j = 0; j < d; ++j) {
            const double wj = (lo[j] + 1.0) - flo[j];
            c[j] = flo[j] + wj * static_cast<double>(digit[j]) / static_cast<double>(fsteps);
        }
        const double s = score_of(c);
        if (s > best_score) {
            best_score = s;
            out = Point(c);
        }
        std::size_t j = 0;
        while (j < d && ++digit[j] == fsteps + 1) digit[j++] = 0;
        if (j == d) break;
    }
    return out;
}

std::optional<HyperRect> largest_empty_cube(const HyperRect& container, std::span<const Point> points, double cap,
                                            double margin) {
    const std::size_t d = container.dim();
    std::vector<const Point*> inside;
    for (const auto& p : points) {
        bool in = true;
        for (std::size_t j = 0; j < d && in; ++j) {
            in = p[j] >= container.lo[j] - margin && p[j] <= container.hi[j] + margin;
        }
        if (in) inside.push_back(&p);
    }

    std::vector<std::vector<double>> corners(d);
    for (std::size_t j = 0; j < d; ++j) {
        corners[j].push_back(container.lo[j]);
        for (const Point* p : inside) {
            const double x = (*p)[j] + margin;
            if (x > container.lo[j] && x < container.hi[j]) corners[j].push_back(x);
        }
        std::sort(corners[j].begin(), corners[j].end());
        corners[j].erase(std::unique(corners[j].begin(), corners[j].end()), corners[j].end());
    }

    double best_side = 0.0;
    std::vector<double> best_lo;
    std::vector<std::size_t> digit(d, 0);
    std::vector<double> lo(d);
    while (true) {
        double side = cap;
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = corners[j][digit[j]];
            side = std::min(side, container.hi[j] - lo[j]);
        }
        for (const Point* p : inside) {
            if (side <= best_side) break;
            bool below = false;
            double reach = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double off = (*p)[j] - lo[j];
                if (off < -0.5 * margin) {
                    below = true;
                    break;
                }
                reach = std::max(reach, off);
            }
            if (!below) side = std::min(side, reach - margin);
        }
        if (side > best_side) {
            best_side = side;
            best_lo = lo;
        }
        std::size_t j = 0;
        while (j < d && ++digit[j] == corners[j].size()) digit[j++] = 0;
        if (j == d) break;
    }
    if (best_lo.empty()) return std::nullopt;
    HyperRect out{best_lo, best_lo};
    for (auto& h : out.hi) h = 0.0;
    for (std::size_t j = 0; j < d; ++j) out.hi[j] = best_lo[j] + best_side;
    return out;
}

// ---------------------------------------------------------------------------

UnitHypercubeIllumination::UnitHypercubeIllumination(std::size_t d, std::size_t rounds, double tol)
    : d_(d), rounds_(rounds == 0 ? (std::size_t{1} << d) : rounds), tol_(tol) {
    if (d < 1 || d > 4) throw std::invalid_argument("unit_illumination: dimension must lie in 1..4");
}

std::optional<RoundDemand> UnitHypercubeIllumination::next(std::span<const Point> placed, std::span<const Point>) {
    if (centers_.size() == rounds_) return std::nullopt;
    Point c = Point::zeros(d_);
    if (!centers_.empty()) {
        auto found = illumination_next_center(centers_, placed, *running_, tol_);
        if (!found) {
            if (rounds_ > (std::size_t{1} << d_)) {
                throw std::runtime_error("unit_illumination: search failed after " + std::to_string(centers_.size()) +
                                         " rounds; more than 2^d rounds were requested");
            }
            // Every unit cube meeting the common region is already pierced. That only
            // settles the game when the algorithm has paid for the full count.
            if (placed.size() >= rounds_)
                note("unit_illumination: stopped after " + std::to_string(centers_.size()) + " rounds with " +
                     std::to_string(placed.size()) + " points already placed");
            else
                fail("unit_illumination: search exhausted after " + std::to_string(centers_.size()) + " rounds");
            rounds_ = centers_.size();
            return std::nullopt;
        }
        c = *found;
    }
    centers_.push_back(c);
    Shape s = cube_at(c, 1.0);
    running_ = intersect(running_, bounding_box(s));
    if (!running_) fail("unit_illumination: common intersection became empty");
    return RoundDemand{std::move(s), true};
}

Point UnitHypercubeIllumination::witness() const { return running_ ? running_->center() : Point::zeros(d_); }

// ---------------------------------------------------------------------------

ChainedHypercubeAdversary::ChainedHypercubeAdversary(std::size_t d, double k, double eps, double tol)
    : d_(d), k_(k), eps_(eps), tol_(tol) {
    if (d < 1 || d > 4) throw std::invalid_argument("chained_gss: dimension must lie in 1..4");
    if (!(k > 1.0 + 2.0 * eps)) throw std::invalid_argument("chained_gss: requires k > 1 + 2 eps");
    require_margin(eps, tol, "chained_gss eps");
}

std::size_t ChainedHypercubeAdversary::planned_games() const {
    std::size_t g = 0;
    for (double r = k_; r / 2.0 - eps_ >= 1.0; r = r / 2.0 - eps_) ++g;
    return g;
}

std::size_t ChainedHypercubeAdversary::promised_rounds() const { return d_ * planned_games() + (std::size_t{1} << d_); }

Point ChainedHypercubeAdversary::witness() const { return running_ ? running_->center() : Point::zeros(d_); }

std::optional<RoundDemand> ChainedHypercubeAdversary::emit(Shape s) {
    running_ = intersect(running_, bounding_box(s));
    if (!running_) {
        fail("chained_gss: common intersection became empty");
        phase_ = Phase::Done;
        return std::nullopt;
    }
    return RoundDemand{std::move(s), true};
}

std::optional<RoundDemand> ChainedHypercubeAdversary::start_game(const HyperRect& starter,
                                                                 std::span<const Point> placed) {
    const double side = starter.side(0);
    const Shape box = cube_at(starter.center(), side);
    if (pierced_by_any(box, placed, tol_)) {
        note("starter of game " + std::to_string(games_ + 1) + " already pierced; restarting");
        return restart(placed, side);
    }
    phase_ = Phase::Gss;
    game_.emplace(starter.center(), side, eps_);
    ++games_;
    game_->record_emitted(box);
    return emit(box);
}

std::optional<RoundDemand> ChainedHypercubeAdversary::start_illumination(const HyperRect& region,
                                                                         std::span<const Point> placed) {
    const Shape box = cube_at(region.center(), 1.0);
    if (pierced_by_any(box, placed, tol_)) {
        note("first illumination cube already pierced; restarting");
        return restart(placed, 1.0);
    }
    phase_ = Phase::Illumination;
    game_.reset();
    illum_centers_.assign(1, region.center());
    return emit(box);
}

std::optional<RoundDemand> ChainedHypercubeAdversary::restart(std::span<const Point> placed, double cap) {
    ++restarts_;
    const auto cube = largest_empty_cube(*running_, placed, cap, eps_);
    if (!cube || cube->side(0) < 1.0) {
        note("no point-free unit cube left after " + std::to_string(games_) + " games");
        phase_ = Phase::Done;
        return std::nullopt;
    }
    const double side = cube->side(0);
    note("restart " + std::to_string(restarts_) + " from a point-free cube of side " + fmt(side));
    if (side / 2.0 - eps_ >= 1.0) return start_game(*cube, placed);
    return start_illumination(*cube, placed);
}

double ChainedHypercubeAdversary::completion_value(std::vector<int>& signs, std::span<const Point> placed) const {
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < d_; ++j) {
        if (signs[j] == 0) free.push_back(j);
    }
    if (free.size() <= 1) return 1.0;  // the last answer only closes the game
    // Average over the sign patterns the next answer can produce on the free axes.
    double total = 0.0;
    const std::size_t patterns = std::size_t{1} << free.size();
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        double best = 0.0;
        for (std::size_t b = 0; b < free.size(); ++b) {
            const std::size_t j = free[b];
            signs[j] = (mask >> b) & 1U ? +1 : -1;
            if (!pierced_by_any(game_->cube_for(signs), placed, tol_)) best = std::max(best, completion_value(signs, placed));
            signs[j] = 0;
        }
        total += best;
    }
    return total / static_cast<double>(patterns);
}

void ChainedHypercubeAdversary::finish_game() {
    GssCertificate cert;
    cert.r = game_->side();
    const HyperRect q = game_->running_intersection();
    const auto sides = game_->promised_sides();
    const double slack = 1e-9 * std::max(1.0, cert.r);
    cert.intersection_ok = true;
    for (std::size_t j = 0; j < d_; ++j) cert.intersection_ok &= std::abs(q.side(j) - sides[j]) <= slack;
    cert.empty_cube = game_->empty_cube();
    cert.empty_ok = true;
    for (std::size_t j = 0; j < d_; ++j) {
        cert.empty_ok &= cert.empty_cube.lo[j] >= q.lo[j] - slack && cert.empty_cube.hi[j] <= q.hi[j] + slack;
    }
    for (const auto& p : game_->answers()) cert.empty_ok &= !cert.empty_cube.contains(p);
    if (!cert.intersection_ok) fail("chained_gss: running intersection of game " + std::to_string(games_) + " has the wrong sides");
    if (!cert.empty_ok) fail("chained_gss: empty cube of game " + std::to_string(games_) + " is not empty");
    certificates_.push_back(cert);
}

std::optional<RoundDemand> ChainedHypercubeAdversary::next(std::span<const Point> placed,
                                                           std::span<const Point> last_added) {
    if (!started_) {
        started_ = true;
        HyperRect starter{std::vector<double>(d_, -k_ / 2.0), std::vector<double>(d_, k_ / 2.0)};
        return start_game(starter, placed);
    }
    switch (phase_) {
        case Phase::Done:
            return std::nullopt;
        case Phase::Gss: {
            const Point& p = answer_in(last_added, game_->last_emitted(), tol_);
            const auto free = game_->unused_axes();
            if (free.size() == 1) {
                game_->observe(p, free.front());
                finish_game();
                const HyperRect e = game_->empty_cube();
                const double side = game_->side() / 2.0 - eps_;
                HyperRect starter{e.lo, e.lo};
                for (std::size_t j = 0; j < d_; ++j) starter.hi[j] = e.lo[j] + side;
                if (side / 2.0 - eps_ >= 1.0) return start_game(starter, placed);
                return start_illumination(starter, placed);
            }
            // Any unused axis can carry this round's sign. Points of earlier games can reach
            // into some of the later cubes, so pick the axis that keeps the most sign outcomes
            // of the rest of this game completable (ties: lowest axis).
            std::size_t axis = free.front();
            double best = -1.0;
            for (std::size_t j : free) {
                std::vector<int> signs = game_->signs();
                signs[j] = game_->sign_for(p, j);
                if (pierced_by_any(game_->cube_for(signs), placed, tol_)) continue;
                const double v = completion_value(signs, placed);
                if (v > best) {
                    best = v;
                    axis = j;
                }
            }
            if (axis != free.front()) ++axis_swaps_;
            game_->observe(p, axis);
            const Shape s = game_->planned();
            if (pierced_by_any(s, placed, tol_)) {
                note("round " + std::to_string(game_->emitted() + 1) + " of game " + std::to_string(games_) +
                     " already pierced on every free axis; restarting");
                return restart(placed, game_->side());
            }
            game_->record_emitted(s);
            return emit(s);
        }
        case Phase::Illumination: {
            if (illum_centers_.size() == (std::size_t{1} << d_)) {
                phase_ = Phase::Done;
                return std::nullopt;
            }
            const auto c = illumination_next_center(illum_centers_, placed, *running_, tol_);
            if (!c) {
                note("illumination search exhausted after " + std::to_string(illum_centers_.size()) + " cubes");
                phase_ = Phase::Done;
                return std::nullopt;
            }
            illum_centers_.push_back(*c);
            return emit(cube_at(*c, 1.0));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

BallGameAdversary::BallGameAdversary(std::size_t d, double k, double eps1, double tol)
    : d_(d), k_(k), eps1_(eps1), tol_(tol), origin_(Point::zeros(d)), r_(k), witness_(Point::zeros(d)) {
    if (d != 2 && d != 3) throw std::invalid_argument("ball game: dimension must be 2 or 3");
    if (!(k >= 1.0)) throw std::invalid_argument("ball game: requires k >= 1");
    if (!(eps1 > 0.0 && eps1 < 1.0)) throw std::invalid_argument("ball game: eps1 must lie in (0, 1)");
    require_margin(eps1 / 40.0, tol, "ball game eps at r = 1");
}

double BallGameAdversary::shrink() const { return (d_ == 3 ? 4.0 : 8.0 / 3.0) + eps1_; }

double BallGameAdversary::stated_ratio() const {
    return d_ == 3 ? (3.0 + eps1_) / (4.0 + eps1_) : (7.0 / 3.0 + eps1_) / (8.0 / 3.0 + eps1_);
}

std::size_t BallGameAdversary::promised_rounds() const {
    std::size_t g = 0;
    for (double r = k_; r >= 1.0; r /= shrink()) ++g;
    return d_ * g + 1;
}

Point BallGameAdversary::empty_center(std::size_t d, double r, double eps, double eps1, std::span<const int> signs) {
    if (signs.size() != d) throw std::invalid_argument("empty_center: one sign per coordinate");
    const double rho = r / ((d == 3 ? 4.0 : 8.0 / 3.0) + eps1);
    std::vector<double> c(d);
    for (std::size_t j = 0; j + 1 < d; ++j) c[j] = signs[j] * (r / 2.0 + eps);
    c[d - 1] = signs[d - 1] * (rho + eps);
    return Point(std::move(c));
}

void BallGameAdversary::finish_game(std::span<const Point> placed) {
    const double eps = eps1_ * r_ / 40.0;
    GsrCertificate cert;
    cert.r = r_;
    cert.eps = eps;
    cert.empty_radius = r_ / shrink();
    cert.stated_bound = r_ * stated_ratio();
    Point c = origin_;
    for (std::size_t i = 0; i < d_; ++i) {
        const double step = i + 1 < d_ ? r_ / 2.0 + eps : cert.empty_radius + eps;
        c = c + (signs_[i] * step) * dirs_[i];
    }
    for (const auto& cj : centers_) cert.max_center_distance = std::max(cert.max_center_distance, distance(c, cj));
    const double slack = 1e-9 * std::max(1.0, r_);
    cert.within_stated_bound = cert.max_center_distance <= cert.stated_bound + slack;
    cert.contained = cert.max_center_distance + cert.empty_radius <= r_ + slack;
    const Shape e = make_ball(c, cert.empty_radius);
    cert.empty = !pierced_by_any(e, placed, tol_);
    const std::string game = std::to_string(certificates_.size() + 1);
    if (!cert.within_stated_bound) fail(tag() + ": game " + game + " breaks the stated center-distance bound");
    if (!cert.contained) fail(tag() + ": game " + game + " empty ball leaves a game ball");
    if (!cert.empty) fail(tag() + ": game " + game + " empty ball holds a placed point");
    certificates_.push_back(cert);
    witness_ = c;
}

std::optional<RoundDemand> BallGameAdversary::final_ball(std::span<const Point> placed) {
    final_emitted_ = true;
    const Point c = witness_;
    const double rho = certificates_.back().empty_radius;
    if (rho >= 1.0) return RoundDemand{make_ball(c, rho), true};

    // E is smaller than the unit scale: find a unit ball holding c and no placed point.
    std::vector<Point> dirs;
    if (d_ == 2) {
        for (int i = 0; i < 64; ++i) {
            const double a = 2.0 * M_PI * i / 64.0;
            dirs.push_back(Point{std::cos(a), std::sin(a)});
        }
    } else {
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < 256; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / 256.0;
            const double rad = std::sqrt(1.0 - z * z);
            dirs.push_back(Point{rad * std::cos(golden * i), rad * std::sin(golden * i), z});
        }
    }
    for (int t = 0; t < 100; ++t) {
        for (const auto& u : dirs) {
            const Point center = c + (t / 100.0) * u;
            const Shape s = make_ball(center, 1.0);
            bool clear = true;
            for (const auto& p : placed) clear &= distance(center, p) > 1.0 + 1e3 * tol_;
            if (clear) return RoundDemand{s, true};
            if (t == 0) break;
        }
    }
    note(tag() + ": no unit ball around the last empty-ball center avoids the placed points");
    phase_ = Phase::Done;
    return std::nullopt;
}

Point BallGameAdversary::axis(std::size_t j) const {
    Point e = Point::zeros(d_);
    e[j] = 1.0;
    return e;
}

Point BallGameAdversary::complement_direction() const {
    // With canonical directions only, the remaining canonical axis.
    std::vector<bool> used(d_, false);
    bool canonical = true;
    for (const auto& u : dirs_) {
        bool hit = false;
        for (std::size_t j = 0; j < d_ && !hit; ++j) {
            if (u == axis(j)) used[j] = hit = true;
        }
        canonical &= hit;
    }
    if (canonical) {
        for (std::size_t j = 0; j < d_; ++j) {
            if (!used[j]) return axis(j);
        }
    }
    if (d_ == 2) return Point{-dirs_[0][1], dirs_[0][0]};
    const Point& a = dirs_[0];
    const Point& b = dirs_[1];
    const Point x{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    return (1.0 / norm2(x)) * x;
}

std::vector<Point> BallGameAdversary::candidate_directions() const {
    std::vector<Point> out;
    // canonical axes orthogonal to everything used so far
    for (std::size_t j = 0; j < d_; ++j) {
        bool orthogonal = true;
        for (const auto& u : dirs_) orthogonal &= std::abs(dot(u, axis(j))) < 1e-12;
        if (orthogonal) out.push_back(axis(j));
    }
    if (d_ == 2 || dirs_.empty()) {
        if (d_ == 2) {
            for (int m = 1; m < 360; ++m) {
                const double a = 2.0 * M_PI * m / 360.0;
                out.push_back(Point{std::cos(a), std::sin(a)});
            }
        } else {
            const double golden = M_PI * (3.0 - std::sqrt(5.0));
            for (int m = 0; m < 400; ++m) {
                const double z = 1.0 - 2.0 * (m + 0.5) / 400.0;
                const double rad = std::sqrt(1.0 - z * z);
                out.push_back(Point{rad * std::cos(golden * m), rad * std::sin(golden * m), z});
            }
        }
        return out;
    }
    // 3-D, second direction: the circle orthogonal to the first one
    const Point& u = dirs_[0];
    const Point helper = std::abs(u[0]) < 0.9 ? axis(0) : axis(1);
    Point a = helper - dot(helper, u) * u;
    a = (1.0 / norm2(a)) * a;
    const Point b{u[1] * a[2] - u[2] * a[1], u[2] * a[0] - u[0] * a[2], u[0] * a[1] - u[1] * a[0]};
    for (int m = 0; m < 360; ++m) {
        const double t = 2.0 * M_PI * m / 360.0;
        out.push_back(std::cos(t) * a + std::sin(t) * b);
    }
    return out;
}

std::optional<RoundDemand> BallGameAdversary::next(std::span<const Point> placed, std::span<const Point> last_added) {
    if (phase_ == Phase::Done || final_emitted_) {
        phase_ = Phase::Done;
        return std::nullopt;
    }
    const double eps = eps1_ * r_ / 40.0;
    if (centers_.empty()) {
        centers_.push_back(origin_);
        witness_ = origin_;
        return RoundDemand{make_ball(origin_, r_), true};
    }
    const Shape last = make_ball(centers_.back(), r_);
    const Point& p = answer_in(last_added, last, tol_);
    auto sign_along = [&](const Point& u) { return dot(p - origin_, u) < 0.0 ? +1 : -1; };

    if (dirs_.size() + 1 == d_) {
        const Point u = complement_direction();
        dirs_.push_back(u);
        signs_.push_back(sign_along(u));
    } else {
        // Any unit direction orthogonal to the ones used so far can carry this sign; the
        // canonical axes come first. Points of earlier games can reach into some choices.
        Point base = origin_;
        for (std::size_t i = 0; i < dirs_.size(); ++i) base = base + (signs_[i] * (r_ + 2.0 * eps)) * dirs_[i];
        std::optional<Point> chosen;
        const auto candidates = candidate_directions();
        for (const auto& u : candidates) {
            const Point c = base + (sign_along(u) * (r_ + 2.0 * eps)) * u;
            if (!pierced_by_any(make_ball(c, r_), placed, tol_)) {
                chosen = u;
                break;
            }
        }
        if (!chosen) {
            fail(tag() + ": every direction for the next ball is already pierced");
            phase_ = Phase::Done;
            return std::nullopt;
        }
        if (!(*chosen == candidates.front())) ++reorientations_;
        dirs_.push_back(*chosen);
        signs_.push_back(sign_along(*chosen));
        Point c = origin_;
        Point w = origin_;
        for (std::size_t i = 0; i < dirs_.size(); ++i) {
            c = c + (signs_[i] * (r_ + 2.0 * eps)) * dirs_[i];
            w = w + (signs_[i] * (r_ / 2.0 + eps)) * dirs_[i];
        }
        centers_.push_back(c);
        witness_ = w;
        return RoundDemand{make_ball(c, r_), true};
    }

    finish_game(placed);
    const double rho = r_ / shrink();
    if (rho < 1.0) return final_ball(placed);
    origin_ = witness_;
    r_ = rho;
    signs_.clear();
    dirs_.clear();
    centers_.assign(1, origin_);
    const Shape s = make_ball(origin_, r_);
    if (pierced_by_any(s, placed, tol_)) {
        fail(tag() + ": next starter ball already pierced");
        phase_ = Phase::Done;
        return std::nullopt;
    }
    return RoundDemand{s, true};
}

// ---------------------------------------------------------------------------

std::size_t AdversaryRun::forced_rounds() const {
    std::size_t n = 0;
    for (const auto& r : transcript.rounds) n += (!r.pierced_on_arrival && !r.points_added.empty()) ? 1 : 0;
    return n;
}

AdversaryRun play(Adversary& adversary, OnlineAlgorithm& algorithm, double tol) {
    constexpr std::size_t kMaxRounds = 100000;
    AdversaryRun run;
    OnlineGame game(algorithm, tol);
    std::vector<Point> last;
    std::vector<Shape> emitted;
    while (true) {
        auto demand = adversary.next(game.set().points(), last);
        if (!demand) break;
        const std::size_t round = emitted.size() + 1;
        if (game.set().pierces(demand->object, tol)) {
            run.violations.push_back("round " + std::to_string(round) + ": object pierced on arrival");
        }
        const Round& r = game.present(demand->object);
        last = r.points_added;
        emitted.push_back(demand->object);
        run.demands.push_back(std::move(*demand));
        const Point w = adversary.witness();
        for (std::size_t i = 0; i < emitted.size(); ++i) {
            if (!contains(emitted[i], w, tol)) {
                run.violations.push_back("round " + std::to_string(round) + ": witness outside object " +
                                         std::to_string(i + 1));
                break;
            }
        }
        if (emitted.size() >= kMaxRounds) {
            run.violations.push_back("adversary did not terminate");
            break;
        }
    }
    run.transcript = game.take_transcript();
    run.witness = adversary.witness();
    for (const auto& f : adversary.certification_failures()) run.violations.push_back(f);
    run.notes = adversary.notes();
    return run;
}

std::unique_ptr<Adversary> make_adversary(const std::string& tag, std::size_t d, double k, double eps, double eps1,
                                          double alpha, std::size_t n, double tol) {
    if (tag == "interval_nest") return std::make_unique<IntervalNestAdversary>(n, 1e-3, tol);
    if (tag == "alpha_fat_nest") return std::make_unique<AlphaFatNestAdversary>(alpha, k, eps, tol);
    if (tag == "chained_gss") return std::make_unique<ChainedHypercubeAdversary>(d, k, eps, tol);
    if (tag == "unit_illumination") return std::make_unique<UnitHypercubeIllumination>(d, 0, tol);
    if (tag == "gsr3d") return std::make_unique<BallGameAdversary>(3, k, eps1, tol);
    if (tag == "gsr2d") return std::make_unique<BallGameAdversary>(2, k, eps1, tol);
    throw std::invalid_argument("unknown adversary tag '" + tag + "'");
}

json to_json(const AdversaryRun& run, const Adversary& adversary) {
    json demands = json::array();
    for (const auto& d : run.demands) demands.push_back(json{{"object", to_json(d.object)}, {"must_add", d.must_add}});
    return json{{"tag", adversary.tag()},
                {"promised_rounds", adversary.promised_rounds()},
                {"demands", demands},
                {"witness", to_json(run.witness)},
                {"forced_rounds", run.forced_rounds()},
                {"alg_points", run.alg_points()},
                {"violations", run.violations},
                {"notes", run.notes},
                {"transcript", to_json(run.transcript)}};
}

}  // namespace pierce
