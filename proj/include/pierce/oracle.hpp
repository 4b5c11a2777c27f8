#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"

namespace pierce {

enum class OptMethod { IntervalGreedy, ExactBnb, WitnessCertified, GreedyUpper, GridBruteForce, Bounds };

std::string method_name(OptMethod m);

/// Offline optimum, exact or bracketed. `lower == upper` means the value is known;
/// `points` (when present) is a piercing set of size `upper`.
struct OptResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<Point> points;
    OptMethod method = OptMethod::Bounds;
    std::size_t nodes = 0;  // branch-and-bound nodes visited

    bool exact() const { return lower == upper; }
};

json to_json(const OptResult& r);

/// Minimum stabbing of intervals: sort by right end, stab at the right end of the
/// first unpierced interval.
OptResult interval_opt(std::span<const Shape> objects);

/// True when every object contains `w` (vacuously true for no objects).
bool verify_witness(std::span<const Shape> objects, const Point& w, double tol = kDefaultTol);

/// Whether exact_min_piercing can handle this family (intervals, axis boxes with
/// d <= 4, or 2-D shapes of any kind).
bool exact_supported(std::span<const Shape> objects);

/// Candidate points that contain a minimum piercing set.
///  * intervals and axis boxes: the grid of lower box coordinates;
///  * 2-D shapes: object centers plus all pairwise boundary intersection points.
std::vector<Point> candidate_points(std::span<const Shape> objects, double tol = kDefaultTol);

/// Exact minimum hitting set over the candidate points, by branch and bound.
/// Falls back to (lower, upper) bounds when `node_limit` is reached.
OptResult exact_min_piercing(std::span<const Shape> objects, std::size_t max_n = 18, std::size_t node_limit = 10'000'000,
                             double tol = kDefaultTol);

/// Repeatedly takes the candidate that pierces the most unpierced objects. For shape
/// families without a candidate generator (balls in d >= 3) the candidates are the
/// object centers plus the midpoints between pairs of centers weighted by radius.
OptResult greedy_piercing(std::span<const Shape> objects, double tol = kDefaultTol);

/// Size of a greedily built family of pairwise disjoint objects: a lower bound on OPT.
/// Supports intervals, axis boxes and balls; other shapes contribute a bound of 1.
std::size_t disjoint_lower_bound(std::span<const Shape> objects);

/// Independent audit oracle for 2-D families: scans a grid of the given pitch over
/// the bounding box and solves the resulting set cover exactly.
OptResult grid_brute_force(std::span<const Shape> objects, double pitch = 0.01, double tol = kDefaultTol);

/// Exact minimum set cover over bit masks (bit i = object i), used by both exact
/// solvers. Returns chosen mask indices; sets `nodes` and `complete` (false when
/// the node limit stopped the search).
struct CoverSolution {
    std::vector<std::size_t> chosen;
    std::size_t lower = 0;
    std::size_t nodes = 0;
    bool complete = true;
};
CoverSolution min_cover(std::span<const std::uint32_t> masks, std::size_t n, std::size_t node_limit);

}  // namespace pierce
