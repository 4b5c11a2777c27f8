#include "pierce/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pierce {

std::string method_name(OptMethod m) {
    switch (m) {
        case OptMethod::IntervalGreedy: return "interval_greedy";
        case OptMethod::ExactBnb: return "exact_bnb";
        case OptMethod::WitnessCertified: return "witness_certified";
        case OptMethod::GreedyUpper: return "greedy_upper";
        case OptMethod::GridBruteForce: return "grid_brute_force";
        case OptMethod::Bounds: return "bounds";
    }
    return "unknown";
}

json to_json(const OptResult& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    json out{{"method", method_name(r.method)}, {"lower", r.lower}, {"upper", r.upper}, {"points", pts}, {"nodes", r.nodes}};
    if (r.exact()) out["opt_size"] = r.upper;
    return out;
}

bool verify_witness(std::span<const Shape> objects, const Point& w, double tol) {
    return std::all_of(objects.begin(), objects.end(), [&](const Shape& s) { return contains(s, w, tol); });
}

OptResult interval_opt(std::span<const Shape> objects) {
    std::vector<Interval> xs;
    for (const auto& s : objects) {
        const auto* i = std::get_if<Interval>(&s);
        if (i == nullptr) throw std::invalid_argument("interval_opt: every object must be an interval");
        xs.push_back(*i);
    }
    std::sort(xs.begin(), xs.end(), [](const Interval& a, const Interval& b) { return a.hi < b.hi; });
    OptResult r;
    r.method = OptMethod::IntervalGreedy;
    double last = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& i : xs) {
        if (any && i.lo <= last) continue;
        last = i.hi;
        any = true;
        r.points.push_back(Point{last});
    }
    r.lower = r.upper = r.points.size();
    return r;
}

namespace {

bool all_kind_intervals_or_boxes(std::span<const Shape> objects) {
    return std::all_of(objects.begin(), objects.end(), [](const Shape& s) {
        return std::holds_alternative<Interval>(s) || std::holds_alternative<AxisBox>(s);
    });
}

// A point inside the shape, used as the origin of its gauge.
Point reference_point(const Shape& s) {
    if (const auto* p = std::get_if<ConvexPolygon2D>(&s)) {
        Point c = Point::zeros(2);
        for (const auto& v : p->vertices) c = c + v;
        return (1.0 / static_cast<double>(p->vertices.size())) * c;
    }
    return shape_center(s);
}

// Boundary of a 2-D shape as a closed curve over t in [0, 1).
Point boundary_at(const Shape& s, double t) {
    const double a = 2.0 * M_PI * t;
    if (const auto* b = std::get_if<Ball>(&s)) return Point{b->center[0] + b->radius * std::cos(a), b->center[1] + b->radius * std::sin(a)};
    if (const auto* e = std::get_if<AxisEllipse2D>(&s)) {
        const double ax = e->major_axis == 0 ? e->semi_major : e->semi_minor;
        const double ay = e->major_axis == 0 ? e->semi_minor : e->semi_major;
        return Point{e->center[0] + ax * std::cos(a), e->center[1] + ay * std::sin(a)};
    }
    std::vector<Point> vs;
    if (const auto* p = std::get_if<ConvexPolygon2D>(&s)) {
        vs = p->vertices;
    } else if (const auto* b = std::get_if<AxisBox>(&s)) {
        const double x = b->center[0], y = b->center[1], h = b->half_side;
        vs = {Point{x - h, y - h}, Point{x + h, y - h}, Point{x + h, y + h}, Point{x - h, y + h}};
    } else {
        throw std::invalid_argument("boundary_at: not a 2-D shape");
    }
    // walk the perimeter at unit speed
    std::vector<double> len(vs.size());
    double total = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) total += len[i] = distance(vs[i], vs[(i + 1) % vs.size()]);
    double target = t * total;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (target <= len[i] || i + 1 == vs.size()) {
            const double f = len[i] > 0.0 ? std::min(1.0, target / len[i]) : 0.0;
            return vs[i] + f * (vs[(i + 1) % vs.size()] - vs[i]);
        }
        target -= len[i];
    }
    return vs.front();
}

struct Gauged {
    Shape centered;
    Point ref;
    double level(const Point& x) const { return gauge(centered, x - ref) - 1.0; }
};

Gauged gauged(const Shape& s) {
    const Point ref = reference_point(s);
    return Gauged{translate(s, -ref), ref};
}

// Points where the boundary of `a` crosses the boundary of `b`.
void boundary_crossings(const Shape& a, const Gauged& b, std::vector<Point>& out) {
    constexpr int kSamples = 1024;
    double t0 = 0.0;
    double f0 = b.level(boundary_at(a, 0.0));
    for (int i = 1; i <= kSamples; ++i) {
        const double t1 = static_cast<double>(i) / kSamples;
        const double f1 = b.level(boundary_at(a, t1 == 1.0 ? 0.0 : t1));
        if (f0 == 0.0) out.push_back(boundary_at(a, t0));
        if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
            double lo = t0, hi = t1, flo = f0;
            for (int it = 0; it < 80 && hi - lo > 1e-17; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = b.level(boundary_at(a, mid));
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            // keep whichever end lies inside b, so the point is in both closed shapes
            out.push_back(boundary_at(a, flo <= 0.0 ? lo : hi));
        }
        t0 = t1;
        f0 = f1;
    }
}

struct MaskedCandidates {
    std::vector<std::uint32_t> masks;
    std::vector<Point> points;  // one representative per mask
};

MaskedCandidates mask_candidates(std::span<const Shape> objects, const std::vector<Point>& candidates, double tol) {
    std::map<std::uint32_t, std::size_t> seen;
    MaskedCandidates out;
    for (const auto& p : candidates) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < objects.size(); ++i) {
            if (contains(objects[i], p, tol)) m |= std::uint32_t{1} << i;
        }
        if (m == 0 || seen.count(m)) continue;
        seen.emplace(m, out.masks.size());
        out.masks.push_back(m);
        out.points.push_back(p);
    }
    return out;
}

void check_size(std::span<const Shape> objects, std::size_t max_n) {
    if (objects.size() > max_n) {
        throw std::invalid_argument("exact oracle: " + std::to_string(objects.size()) + " objects exceed the limit " +
                                    std::to_string(max_n));
    }
    if (objects.size() > 32) throw std::invalid_argument("exact oracle: at most 32 objects");
}

class CoverSearch {
public:
    CoverSearch(std::vector<std::uint32_t> masks, std::size_t n, std::size_t limit)
        : masks_(std::move(masks)), n_(n), limit_(limit), covering_(n), neighborhood_(n, 0) {
        for (std::size_t m = 0; m < masks_.size(); ++m) {
            for (std::size_t e = 0; e < n; ++e) {
                if (masks_[m] >> e & 1U) {
                    covering_[e].push_back(m);
                    neighborhood_[e] |= masks_[m];
                }
            }
        }
    }

    CoverSolution run() {
        const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
        for (std::size_t e = 0; e < n_; ++e) {
            if (covering_[e].empty()) throw std::invalid_argument("set cover: object " + std::to_string(e) + " has no candidate");
        }
        best_ = greedy(all);
        CoverSolution sol;
        sol.lower = independent_bound(all);
        std::vector<std::size_t> chosen;
        search(all, chosen);
        sol.chosen = best_;
        sol.nodes = nodes_;
        sol.complete = !stopped_;
        if (sol.complete) sol.lower = best_.size();
        return sol;
    }

private:
    std::vector<std::size_t> greedy(std::uint32_t uncovered) const {
        std::vector<std::size_t> out;
        while (uncovered != 0) {
            std::size_t best = 0;
            int gain = -1;
            for (std::size_t m = 0; m < masks_.size(); ++m) {
                const int g = std::popcount(masks_[m] & uncovered);
                if (g > gain) {
                    gain = g;
                    best = m;
                }
            }
            out.push_back(best);
            uncovered &= ~masks_[best];
        }
        return out;
    }

    // Elements no two of which share a candidate each need their own point.
    std::size_t independent_bound(std::uint32_t uncovered) const {
        std::size_t count = 0;
        while (uncovered != 0) {
            std::size_t pick = n_;
            std::size_t fewest = std::numeric_limits<std::size_t>::max();
            for (std::uint32_t u = uncovered; u != 0; u &= u - 1) {
                const std::size_t e = static_cast<std::size_t>(std::countr_zero(u));
                if (covering_[e].size() < fewest) {
                    fewest = covering_[e].size();
                    pick = e;
                }
            }
            ++count;
            uncovered &= ~neighborhood_[pick];
        }
        return count;
    }

    void search(std::uint32_t uncovered, std::vector<std::size_t>& chosen) {
        if (stopped_) return;
        if (++nodes_ > limit_) {
            stopped_ = true;
            return;
        }
        if (uncovered == 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + independent_bound(uncovered) >= best_.size()) return;

        // branch on the uncovered element with the fewest candidates
        std::size_t pick = n_;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::uint32_t u = uncovered; u != 0; u &= u - 1) {
            const std::size_t e = static_cast<std::size_t>(std::countr_zero(u));
            if (covering_[e].size() < fewest) {
                fewest = covering_[e].size();
                pick = e;
            }
        }
        std::vector<std::size_t> options = covering_[pick];
        std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(masks_[a] & uncovered) > std::popcount(masks_[b] & uncovered);
        });
        for (std::size_t m : options) {
            chosen.push_back(m);
            search(uncovered & ~masks_[m], chosen);
            chosen.pop_back();
            if (stopped_) return;
        }
    }

    std::vector<std::uint32_t> masks_;
    std::size_t n_, limit_;
    std::vector<std::vector<std::size_t>> covering_;
    std::vector<std::uint32_t> neighborhood_;
    std::vector<std::size_t> best_;
    std::size_t nodes_ = 0;
    bool stopped_ = false;
};

// Drops masks contained in another mask; the survivors still admit a minimum cover.
std::vector<std::size_t> maximal_masks(const std::vector<std::uint32_t>& masks) {
    std::vector<std::size_t> order(masks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::popcount(masks[a]) > std::popcount(masks[b]); });
    std::vector<std::size_t> keep;
    for (std::size_t i : order) {
        bool dominated = false;
        for (std::size_t k : keep) {
            if ((masks[i] & ~masks[k]) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

OptResult solve_masked(const MaskedCandidates& mc, std::size_t n, std::size_t node_limit, OptMethod method) {
    OptResult r;
    r.method = method;
    if (n == 0) return r;
    const auto keep = maximal_masks(mc.masks);
    std::vector<std::uint32_t> masks;
    for (std::size_t i : keep) masks.push_back(mc.masks[i]);
    const CoverSolution sol = CoverSearch(masks, n, node_limit).run();
    for (std::size_t m : sol.chosen) r.points.push_back(mc.points[keep[m]]);
    r.upper = sol.chosen.size();
    r.lower = sol.lower;
    r.nodes = sol.nodes;
    if (!sol.complete) r.method = OptMethod::Bounds;
    return r;
}

}  // namespace

CoverSolution min_cover(std::span<const std::uint32_t> masks, std::size_t n, std::size_t node_limit) {
    if (n > 32) throw std::invalid_argument("min_cover: at most 32 elements");
    if (n == 0) return {};
    return CoverSearch(std::vector<std::uint32_t>(masks.begin(), masks.end()), n, node_limit).run();
}

bool exact_supported(std::span<const Shape> objects) {
    if (objects.empty()) return true;
    const std::size_t d = dimension(objects.front());
    for (const auto& s : objects) {
        if (dimension(s) != d) return false;
    }
    if (all_kind_intervals_or_boxes(objects)) return d <= 4;
    return d == 2;
}

std::vector<Point> candidate_points(std::span<const Shape> objects, double tol) {
    (void)tol;
    if (!exact_supported(objects)) throw std::invalid_argument("candidate_points: unsupported shape family");
    std::vector<Point> out;
    if (objects.empty()) return out;
    const std::size_t d = dimension(objects.front());

    if (all_kind_intervals_or_boxes(objects)) {
        std::vector<std::vector<double>> axis(d);
        for (const auto& s : objects) {
            const HyperRect r = bounding_box(s);
            for (std::size_t j = 0; j < d; ++j) axis[j].push_back(r.lo[j]);
        }
        for (auto& a : axis) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        std::vector<std::size_t> digit(d, 0);
        while (true) {
            std::vector<double> c(d);
            for (std::size_t j = 0; j < d; ++j) c[j] = axis[j][digit[j]];
            out.emplace_back(std::move(c));
            std::size_t j = 0;
            while (j < d && ++digit[j] == axis[j].size()) digit[j++] = 0;
            if (j == d) break;
        }
        return out;
    }

    std::vector<Gauged> g;
    for (const auto& s : objects) {
        out.push_back(reference_point(s));
        g.push_back(gauged(s));
    }
    for (std::size_t a = 0; a < objects.size(); ++a) {
        for (std::size_t b = 0; b < objects.size(); ++b) {
            if (a != b) boundary_crossings(objects[a], g[b], out);
        }
    }
    return out;
}

OptResult exact_min_piercing(std::span<const Shape> objects, std::size_t max_n, std::size_t node_limit, double tol) {
    check_size(objects, max_n);
    if (!exact_supported(objects)) throw std::invalid_argument("exact oracle: unsupported shape family or dimension");
    const MaskedCandidates mc = mask_candidates(objects, candidate_points(objects, tol), tol);
    return solve_masked(mc, objects.size(), node_limit, OptMethod::ExactBnb);
}

namespace {

std::vector<Point> fallback_candidates(std::span<const Shape> objects) {
    std::vector<Point> out;
    for (const auto& s : objects) out.push_back(shape_center(s));
    for (std::size_t a = 0; a < objects.size(); ++a) {
        for (std::size_t b = a + 1; b < objects.size(); ++b) {
            const Point ca = shape_center(objects[a]);
            const Point cb = shape_center(objects[b]);
            const double ra = scale_of(objects[a]), rb = scale_of(objects[b]);
            out.push_back(ca + (ra / (ra + rb)) * (cb - ca));
        }
    }
    return out;
}

}  // namespace

OptResult greedy_piercing(std::span<const Shape> objects, double tol) {
    OptResult r;
    r.method = OptMethod::GreedyUpper;
    if (objects.empty()) return r;
    const std::vector<Point> cands = exact_supported(objects) ? candidate_points(objects, tol) : fallback_candidates(objects);

    std::vector<bool> pierced(objects.size(), false);
    std::size_t left = objects.size();
    while (left > 0) {
        std::size_t best = cands.size();
        std::size_t gain = 0;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            std::size_t g = 0;
            for (std::size_t i = 0; i < objects.size(); ++i) g += (!pierced[i] && contains(objects[i], cands[c], tol)) ? 1 : 0;
            if (g > gain) {
                gain = g;
                best = c;
            }
        }
        Point p;
        if (best == cands.size()) {
            // no candidate reaches what is left: pierce one object at its center
            std::size_t i = 0;
            while (pierced[i]) ++i;
            p = shape_center(objects[i]);
        } else {
            p = cands[best];
        }
        for (std::size_t i = 0; i < objects.size(); ++i) {
            if (!pierced[i] && contains(objects[i], p, tol)) {
                pierced[i] = true;
                --left;
            }
        }
        r.points.push_back(p);
    }
    r.upper = r.points.size();
    r.lower = std::min(r.upper, std::max<std::size_t>(1, disjoint_lower_bound(objects)));
    return r;
}

std::size_t disjoint_lower_bound(std::span<const Shape> objects) {
    if (objects.empty()) return 0;
    const bool simple = std::all_of(objects.begin(), objects.end(), [](const Shape& s) {
        return std::holds_alternative<Interval>(s) || std::holds_alternative<AxisBox>(s) || std::holds_alternative<Ball>(s);
    });
    if (!simple) return 1;

    auto disjoint = [](const Shape& a, const Shape& b) {
        const auto* ba = std::get_if<Ball>(&a);
        const auto* bb = std::get_if<Ball>(&b);
        if (ba != nullptr && bb != nullptr) return distance(ba->center, bb->center) > ba->radius + bb->radius + 1e-9;
        // boxes, intervals, and a ball against a box by its bounding box (conservative)
        const HyperRect ra = bounding_box(a), rb = bounding_box(b);
        for (std::size_t j = 0; j < ra.dim(); ++j) {
            if (ra.hi[j] < rb.lo[j] || rb.hi[j] < ra.lo[j]) return true;
        }
        return false;
    };

    std::vector<std::size_t> order(objects.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scale_of(objects[a]) < scale_of(objects[b]); });
    std::vector<std::size_t> chosen;
    for (std::size_t i : order) {
        if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return disjoint(objects[i], objects[c]); })) {
            chosen.push_back(i);
        }
    }
    return chosen.size();
}

OptResult grid_brute_force(std::span<const Shape> objects, double pitch, double tol) {
    if (objects.size() > 32) throw std::invalid_argument("grid_brute_force: at most 32 objects");
    OptResult r;
    r.method = OptMethod::GridBruteForce;
    if (objects.empty()) return r;
    for (const auto& s : objects) {
        if (dimension(s) != 2) throw std::invalid_argument("grid_brute_force: 2-D objects only");
    }
    HyperRect box = bounding_box(objects.front());
    for (const auto& s : objects) {
        const HyperRect b = bounding_box(s);
        for (std::size_t j = 0; j < 2; ++j) {
            box.lo[j] = std::min(box.lo[j], b.lo[j]);
            box.hi[j] = std::max(box.hi[j], b.hi[j]);
        }
    }
    const auto nx = static_cast<std::size_t>(std::floor(box.side(0) / pitch)) + 1;
    const auto ny = static_cast<std::size_t>(std::floor(box.side(1) / pitch)) + 1;
    std::vector<HyperRect> bbs;
    for (const auto& s : objects) bbs.push_back(bounding_box(s));

    std::map<std::uint32_t, Point> seen;
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = box.lo[0] + pitch * static_cast<double>(ix);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double y = box.lo[1] + pitch * static_cast<double>(iy);
            std::uint32_t m = 0;
            for (std::size_t i = 0; i < objects.size(); ++i) {
                if (x < bbs[i].lo[0] - tol || x > bbs[i].hi[0] + tol || y < bbs[i].lo[1] - tol || y > bbs[i].hi[1] + tol) continue;
                if (contains(objects[i], Point{x, y}, tol)) m |= std::uint32_t{1} << i;
            }
            if (m != 0 && !seen.count(m)) seen.emplace(m, Point{x, y});
        }
    }
    MaskedCandidates mc;
    for (auto& [m, p] : seen) {
        mc.masks.push_back(m);
        mc.points.push_back(p);
    }
    return solve_masked(mc, objects.size(), 10'000'000, OptMethod::GridBruteForce);
}

}  // namespace pierce
