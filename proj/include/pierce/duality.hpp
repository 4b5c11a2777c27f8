#pragma once

#include <span>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"

namespace pierce {

// Piercing translates of a convex body C is the same problem as covering their
// centers with translates of -C: x lies in y + C exactly when y lies in x + (-C).
//
// "Center" here is a translation-equivariant reference point: the symmetric center
// for intervals, boxes, balls and ellipses, and the vertex average for polygons.
// C is normalized so that its reference point sits at the origin.

struct CoveringInstance {
    std::vector<Point> points;  // reference points of the objects
    Shape cover_shape;          // -C, reference point at the origin
};

Point reference_point(const Shape& s);

/// Throws std::invalid_argument when some object is not a translate of `c`
/// (compared field-wise, or vertex-wise for polygons, within `tol` after alignment).
CoveringInstance to_covering(std::span<const Shape> objects, const Shape& c, double tol = 1e-9);

/// contains(y + C, x) == contains(x + (-C), y), with C taken as given (the origin
/// must lie inside it).
bool equivalence_check(const Shape& c, const Point& x, const Point& y, double tol = kDefaultTol);

/// gauge_C(x - y) - 1: negative when x is inside y + C, positive outside. Samples
/// with |margin| below a band are boundary-grazing.
double boundary_margin(const Shape& c, const Point& x, const Point& y);

/// Copies of -C placed at each piercing point.
std::vector<Shape> cover_from_piercing(const CoveringInstance& inst, std::span<const Point> piercing);
/// Each cover copy q + (-C) yields the piercing point q.
std::vector<Point> piercing_from_cover(const CoveringInstance& inst, std::span<const Shape> cover);
/// Every point lies in some cover shape, within `tol` (boxes included).
bool covers_all(std::span<const Shape> cover, std::span<const Point> points, double tol = kDefaultTol);

json to_json(const CoveringInstance& inst);

}  // namespace pierce
