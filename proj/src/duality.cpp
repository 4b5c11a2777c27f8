#include "pierce/duality.hpp"

#include <stdexcept>
#include <string>

namespace pierce {

Point reference_point(const Shape& s) {
    if (const auto* poly = std::get_if<ConvexPolygon2D>(&s)) {
        Point sum = Point::zeros(2);
        for (const auto& v : poly->vertices) sum = sum + v;
        return (1.0 / static_cast<double>(poly->vertices.size())) * sum;
    }
    return shape_center(s);
}

CoveringInstance to_covering(std::span<const Shape> objects, const Shape& c, double tol) {
    const Point c_ref = reference_point(c);
    const Shape c0 = translate(c, -c_ref);
    CoveringInstance inst{{}, reflect(c0, Point::zeros(dimension(c)))};
    inst.points.reserve(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const Shape& o = objects[i];
        if (o.index() != c.index() || dimension(o) != dimension(c))
            throw std::invalid_argument("to_covering: object " + std::to_string(i) + " has a different kind than C");
        const Point ref = reference_point(o);
        if (!approx_equal(translate(c0, ref), o, tol))
            throw std::invalid_argument("to_covering: object " + std::to_string(i) + " is not a translate of C");
        inst.points.push_back(ref);
    }
    return inst;
}

bool equivalence_check(const Shape& c, const Point& x, const Point& y, double tol) {
    const bool x_in_y_c = contains(translate(c, y), x, tol);
    const Shape minus_c = reflect(c, Point::zeros(x.dim()));
    const bool y_in_x_minus_c = contains(translate(minus_c, x), y, tol);
    return x_in_y_c == y_in_x_minus_c;
}

double boundary_margin(const Shape& c, const Point& x, const Point& y) { return gauge(c, x - y) - 1.0; }

std::vector<Shape> cover_from_piercing(const CoveringInstance& inst, std::span<const Point> piercing) {
    std::vector<Shape> out;
    out.reserve(piercing.size());
    for (const auto& p : piercing) out.push_back(translate(inst.cover_shape, p));
    return out;
}

std::vector<Point> piercing_from_cover(const CoveringInstance& inst, std::span<const Shape> cover) {
    std::vector<Point> out;
    out.reserve(cover.size());
    const Point base = reference_point(inst.cover_shape);
    for (const auto& s : cover) out.push_back(reference_point(s) - base);
    return out;
}

namespace {

// Boxes and intervals compare coordinates exactly in contains(); a cover copy placed at
// a box corner lands one rounding step away from the center it should reach, so the
// transfer check applies the tolerance to them as well.
bool covers(const Shape& s, const Point& p, double tol) {
    if (const auto* b = std::get_if<AxisBox>(&s)) return to_hyperrect(*b).contains(p, tol);
    if (const auto* i = std::get_if<Interval>(&s)) return to_hyperrect(*i).contains(p, tol);
    return contains(s, p, tol);
}

}  // namespace

bool covers_all(std::span<const Shape> cover, std::span<const Point> points, double tol) {
    for (const auto& p : points) {
        bool hit = false;
        for (const auto& s : cover)
            if (covers(s, p, tol)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

json to_json(const CoveringInstance& inst) {
    return json{{"points", points_to_json(inst.points)}, {"cover_shape", to_json(inst.cover_shape)}};
}

}  // namespace pierce
