#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pierce {

inline constexpr double kDefaultTol = 1e-9;

class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    static Point zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const Point&) const = default;

private:
    std::vector<double> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(double s, const Point& a);

double dot(const Point& a, const Point& b);
double norm2(const Point& a);
double norm_inf(const Point& a);
double distance(const Point& a, const Point& b);
double distance_inf(const Point& a, const Point& b);
bool approx_equal(const Point& a, const Point& b, double tol);
std::string to_string(const Point& p);

// Closed shapes. All of them are valid only when made through the make_* helpers
// or checked with validate().
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct AxisBox {
    Point center;
    double half_side = 0.0;
};

struct Ball {
    Point center;
    double radius = 0.0;
};

struct ConvexPolygon2D {
    std::vector<Point> vertices;  // strictly convex, counter-clockwise
};

struct AxisEllipse2D {
    Point center;
    double semi_minor = 0.0;
    double semi_major = 0.0;
    int major_axis = 1;  // coordinate index (0 = x, 1 = y) carrying the semi-major axis
};

using Shape = std::variant<Interval, AxisBox, Ball, ConvexPolygon2D, AxisEllipse2D>;

enum class Norm { L2, LInf };

struct FatMetrics {
    Point center;
    double width = 0.0;
    double height = 0.0;
    double alpha = 0.0;
    Norm norm = Norm::L2;
};

// Per-coordinate closed intervals [lo_j, hi_j].
struct HyperRect {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dim() const { return lo.size(); }
    double side(std::size_t j) const { return hi[j] - lo[j]; }
    Point center() const;
    bool contains(const Point& p, double tol = 0.0) const;
};

Shape make_interval(double lo, double hi);
Shape make_box(Point center, double half_side);
Shape make_ball(Point center, double radius);
Shape make_polygon(std::vector<Point> vertices);
Shape make_ellipse(Point center, double semi_minor, double semi_major, int major_axis = 1);

/// Throws std::invalid_argument when a shape breaks its invariants.
void validate(const Shape& s);

std::string kind_name(const Shape& s);
std::size_t dimension(const Shape& s);

/// Closed-set membership. Boxes and intervals compare coordinates exactly;
/// balls and ellipses compare squared distances with tolerance `tol`;
/// polygons use signed edge distances with tolerance `tol`.
bool contains(const Shape& s, const Point& p, double tol = kDefaultTol);

/// Symmetric center for interval, box, ball and ellipse. Polygons get a
/// numerical maximizer of the aspect ratio alpha(x) under `norm`.
Point shape_center(const Shape& s, Norm norm = Norm::L2);

FatMetrics fat_metrics(const Shape& s, Norm norm);

/// Point reflection x -> 2c - x.
Shape reflect(const Shape& s, const Point& c);
Shape translate(const Shape& s, const Point& v);

/// Scale parameter used for the [1, k] range of a stream: interval length,
/// box side, ball radius, ellipse semi-minor axis, polygon L2 width.
double scale_of(const Shape& s);

/// Gauge of `v` with respect to a convex shape containing the origin in its interior.
double gauge(const Shape& c, const Point& v);

/// Convex distance d_C(x, y) = |x - y| / |x - v| where v is the boundary point of
/// x + C on the ray from x through y. Throws when C does not contain the origin
/// in its interior.
double convex_distance(const Shape& c, const Point& x, const Point& y);

HyperRect to_hyperrect(const AxisBox& b);
HyperRect to_hyperrect(const Interval& i);
/// Axis-aligned bounding box of any shape.
HyperRect bounding_box(const Shape& s);

/// Coordinate-wise [max lo_j, min hi_j]; nullopt when empty in some coordinate.
std::optional<HyperRect> box_common_intersection(std::span<const HyperRect> boxes);

/// Equality of shapes up to `tol` (polygons compare as vertex sets).
bool approx_equal(const Shape& a, const Shape& b, double tol);

}  // namespace pierce
