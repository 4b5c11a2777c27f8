#include "pierce/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pierce {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dim(std::size_t expected, const Point& p) {
    if (p.dim() != expected) {
        throw std::invalid_argument("dimension mismatch: shape has " + std::to_string(expected) +
                                    " coordinates, point has " + std::to_string(p.dim()));
    }
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Signed distance of p to the supporting line of edge a->b; positive inside a CCW polygon.
double edge_signed_distance(const Point& a, const Point& b, const Point& p) {
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    return cross(a, b, p) / len;
}

double segment_distance_l2(const Point& a, const Point& b, const Point& p) {
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1]);
}

// min over t in [0,1] of max(|f(t)|, |g(t)|) with f, g affine: the optimum sits at an
// endpoint, a zero of f or g, or where |f| = |g|.
double segment_distance_inf(const Point& a, const Point& b, const Point& p) {
    const double f0 = a[0] - p[0], df = b[0] - a[0];
    const double g0 = a[1] - p[1], dg = b[1] - a[1];
    auto eval = [&](double t) { return std::max(std::abs(f0 + t * df), std::abs(g0 + t * dg)); };
    std::array<double, 6> ts{0.0, 1.0, -1.0, -1.0, -1.0, -1.0};
    if (df != 0.0) ts[2] = -f0 / df;
    if (dg != 0.0) ts[3] = -g0 / dg;
    if (df - dg != 0.0) ts[4] = (g0 - f0) / (df - dg);
    if (df + dg != 0.0) ts[5] = -(f0 + g0) / (df + dg);
    double best = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        if (t >= 0.0 && t <= 1.0) best = std::min(best, eval(t));
    }
    return best;
}

bool strictly_inside(const ConvexPolygon2D& poly, const Point& p) {
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], p) <= 0.0) return false;
    }
    return true;
}

struct BoundaryDistances {
    double min = 0.0;
    double max = 0.0;
};

BoundaryDistances polygon_boundary_distances(const ConvexPolygon2D& poly, const Point& x, Norm norm) {
    const auto& v = poly.vertices;
    BoundaryDistances out{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double dmin = norm == Norm::L2 ? segment_distance_l2(a, b, x) : segment_distance_inf(a, b, x);
        out.min = std::min(out.min, dmin);
        out.max = std::max(out.max, norm == Norm::L2 ? distance(a, x) : distance_inf(a, x));
    }
    return out;
}

double polygon_alpha_at(const ConvexPolygon2D& poly, const Point& x, Norm norm) {
    if (!strictly_inside(poly, x)) return -1.0;
    const auto d = polygon_boundary_distances(poly, x, norm);
    return d.min / d.max;
}

Point polygon_centroid(const ConvexPolygon2D& poly) {
    const auto& v = poly.vertices;
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double w = a[0] * b[1] - b[0] * a[1];
        area2 += w;
        cx += (a[0] + b[0]) * w;
        cy += (a[1] + b[1]) * w;
    }
    return Point{cx / (3.0 * area2), cy / (3.0 * area2)};
}

// Nelder-Mead maximization of alpha(x) in the plane.
Point nelder_mead_max(const ConvexPolygon2D& poly, Norm norm, Point start, double step) {
    auto f = [&](const Point& p) { return -polygon_alpha_at(poly, p, norm); };
    std::array<Point, 3> s{start, start + Point{step, 0.0}, start + Point{0.0, step}};
    std::array<double, 3> fs{f(s[0]), f(s[1]), f(s[2])};
    for (int iter = 0; iter < 400; ++iter) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        const Point best = s[idx[0]], mid = s[idx[1]], worst = s[idx[2]];
        const double fb = fs[idx[0]], fm = fs[idx[1]], fw = fs[idx[2]];
        if (std::abs(fw - fb) < 1e-15 && distance(best, worst) < 1e-12) break;
        const Point centroid = 0.5 * (best + mid);
        const Point refl = centroid + (centroid - worst);
        const double fr = f(refl);
        std::array<Point, 3> ns{best, mid, worst};
        std::array<double, 3> nf{fb, fm, fw};
        if (fr < fb) {
            const Point exp = centroid + 2.0 * (centroid - worst);
            const double fe = f(exp);
            if (fe < fr) {
                ns[2] = exp;
                nf[2] = fe;
            } else {
                ns[2] = refl;
                nf[2] = fr;
            }
        } else if (fr < fm) {
            ns[2] = refl;
            nf[2] = fr;
        } else {
            const Point con = centroid + 0.5 * (worst - centroid);
            const double fc = f(con);
            if (fc < fw) {
                ns[2] = con;
                nf[2] = fc;
            } else {
                ns[1] = best + 0.5 * (mid - best);
                ns[2] = best + 0.5 * (worst - best);
                nf[1] = f(ns[1]);
                nf[2] = f(ns[2]);
            }
        }
        s = ns;
        fs = nf;
    }
    std::size_t arg = std::min_element(fs.begin(), fs.end()) - fs.begin();
    return s[arg];
}

Point polygon_center(const ConvexPolygon2D& poly, Norm norm) {
    const Point centroid = polygon_centroid(poly);
    double diameter = 0.0;
    for (const auto& a : poly.vertices) {
        for (const auto& b : poly.vertices) diameter = std::max(diameter, distance(a, b));
    }
    Point best = nelder_mead_max(poly, norm, centroid, 0.05 * diameter);
    double best_alpha = polygon_alpha_at(poly, best, norm);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> jitter(-0.1 * diameter, 0.1 * diameter);
    for (int restart = 0; restart < 20; ++restart) {
        Point start = centroid + Point{jitter(rng), jitter(rng)};
        if (!strictly_inside(poly, start)) start = centroid;
        const Point cand = nelder_mead_max(poly, norm, start, 0.05 * diameter);
        const double a = polygon_alpha_at(poly, cand, norm);
        if (a > best_alpha) {
            best_alpha = a;
            best = cand;
        }
    }
    return best;
}

// Axes lengths of an ellipse in (x, y) order.
std::pair<double, double> ellipse_axes(const AxisEllipse2D& e) {
    return e.major_axis == 0 ? std::pair{e.semi_major, e.semi_minor} : std::pair{e.semi_minor, e.semi_major};
}

double ball_gauge(const Point& center, double radius, const Point& v) {
    const double vv = dot(v, v);
    if (vv == 0.0) return 0.0;
    const double vc = dot(v, center);
    const double cc = dot(center, center);
    const double t = (vc + std::sqrt(vc * vc - vv * (cc - radius * radius))) / vv;
    return 1.0 / t;
}

bool origin_interior(const Shape& c) {
    return std::visit(
        overloaded{
            [](const Interval& i) { return i.lo < 0.0 && 0.0 < i.hi; },
            [](const AxisBox& b) {
                for (std::size_t j = 0; j < b.center.dim(); ++j) {
                    if (std::abs(b.center[j]) >= b.half_side) return false;
                }
                return true;
            },
            [](const Ball& b) { return norm2(b.center) < b.radius; },
            [](const ConvexPolygon2D& p) { return strictly_inside(p, Point{0.0, 0.0}); },
            [](const AxisEllipse2D& e) {
                const auto [ax, ay] = ellipse_axes(e);
                return std::hypot(e.center[0] / ax, e.center[1] / ay) < 1.0;
            },
        },
        c);
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double x : coords_) {
        if (!std::isfinite(x)) throw std::invalid_argument("point coordinates must be finite");
    }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point operator+(const Point& a, const Point& b) {
    require_dim(a.dim(), b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
    return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
    require_dim(a.dim(), b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
    return Point(std::move(out));
}

Point operator-(const Point& a) { return -1.0 * a; }

Point operator*(double s, const Point& a) {
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
    return Point(std::move(out));
}

double dot(const Point& a, const Point& b) {
    require_dim(a.dim(), b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Point& a) {
    double m = 0.0;
    for (double x : a.coords()) m = std::max(m, std::abs(x));
    return m;
}

double distance(const Point& a, const Point& b) { return norm2(a - b); }
double distance_inf(const Point& a, const Point& b) { return norm_inf(a - b); }

bool approx_equal(const Point& a, const Point& b, double tol) {
    return a.dim() == b.dim() && distance_inf(a, b) <= tol;
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i];
    os << ')';
    return os.str();
}

Point HyperRect::center() const {
    std::vector<double> c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = 0.5 * (lo[j] + hi[j]);
    return Point(std::move(c));
}

bool HyperRect::contains(const Point& p, double tol) const {
    require_dim(dim(), p);
    for (std::size_t j = 0; j < dim(); ++j) {
        if (p[j] < lo[j] - tol || p[j] > hi[j] + tol) return false;
    }
    return true;
}

Shape make_interval(double lo, double hi) {
    Shape s = Interval{lo, hi};
    validate(s);
    return s;
}

Shape make_box(Point center, double half_side) {
    Shape s = AxisBox{std::move(center), half_side};
    validate(s);
    return s;
}

Shape make_ball(Point center, double radius) {
    Shape s = Ball{std::move(center), radius};
    validate(s);
    return s;
}

Shape make_polygon(std::vector<Point> vertices) {
    Shape s = ConvexPolygon2D{std::move(vertices)};
    validate(s);
    return s;
}

Shape make_ellipse(Point center, double semi_minor, double semi_major, int major_axis) {
    Shape s = AxisEllipse2D{std::move(center), semi_minor, semi_major, major_axis};
    validate(s);
    return s;
}

void validate(const Shape& s) {
    auto fail = [](const std::string& why) { throw std::invalid_argument("invalid shape: " + why); };
    std::visit(overloaded{
                   [&](const Interval& i) {
                       if (!std::isfinite(i.lo) || !std::isfinite(i.hi) || !(i.lo < i.hi)) fail("interval needs lo < hi");
                   },
                   [&](const AxisBox& b) {
                       if (b.center.dim() < 1) fail("box dimension must be >= 1");
                       if (!(b.half_side > 0.0) || !std::isfinite(b.half_side)) fail("box half_side must be > 0");
                   },
                   [&](const Ball& b) {
                       if (b.center.dim() < 1) fail("ball dimension must be >= 1");
                       if (!(b.radius > 0.0) || !std::isfinite(b.radius)) fail("ball radius must be > 0");
                   },
                   [&](const ConvexPolygon2D& p) {
                       const auto& v = p.vertices;
                       if (v.size() < 3) fail("polygon needs at least 3 vertices");
                       for (const auto& q : v) {
                           if (q.dim() != 2) fail("polygon vertices must be 2-D");
                       }
                       for (std::size_t i = 0; i < v.size(); ++i) {
                           if (cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) <= 0.0) {
                               fail("polygon must be strictly convex and counter-clockwise");
                           }
                       }
                       // a strictly left-turning closed chain can still wind twice
                       double turn = 0.0;
                       for (std::size_t i = 0; i < v.size(); ++i) {
                           const Point& a = v[i];
                           const Point& b = v[(i + 1) % v.size()];
                           const Point& c = v[(i + 2) % v.size()];
                           const double a1 = std::atan2(b[1] - a[1], b[0] - a[0]);
                           const double a2 = std::atan2(c[1] - b[1], c[0] - b[0]);
                           double d = a2 - a1;
                           while (d <= 0.0) d += 2.0 * M_PI;
                           turn += d;
                       }
                       if (std::abs(turn - 2.0 * M_PI) > 1e-6) fail("polygon winds more than once");
                   },
                   [&](const AxisEllipse2D& e) {
                       if (e.center.dim() != 2) fail("ellipse must be 2-D");
                       if (!(e.semi_minor > 0.0) || !(e.semi_minor <= e.semi_major) || !std::isfinite(e.semi_major)) {
                           fail("ellipse needs 0 < semi_minor <= semi_major");
                       }
                       if (e.major_axis != 0 && e.major_axis != 1) fail("ellipse major_axis must be 0 or 1");
                   },
               },
               s);
}

std::string kind_name(const Shape& s) {
    return std::visit(overloaded{
                          [](const Interval&) { return std::string("interval"); },
                          [](const AxisBox&) { return std::string("axis_box"); },
                          [](const Ball&) { return std::string("ball"); },
                          [](const ConvexPolygon2D&) { return std::string("polygon"); },
                          [](const AxisEllipse2D&) { return std::string("ellipse"); },
                      },
                      s);
}

std::size_t dimension(const Shape& s) {
    return std::visit(overloaded{
                          [](const Interval&) -> std::size_t { return 1; },
                          [](const AxisBox& b) { return b.center.dim(); },
                          [](const Ball& b) { return b.center.dim(); },
                          [](const ConvexPolygon2D&) -> std::size_t { return 2; },
                          [](const AxisEllipse2D&) -> std::size_t { return 2; },
                      },
                      s);
}

bool contains(const Shape& s, const Point& p, double tol) {
    if (tol < 0.0) throw std::invalid_argument("tolerance must be >= 0");
    require_dim(dimension(s), p);
    return std::visit(overloaded{
                          [&](const Interval& i) { return i.lo <= p[0] && p[0] <= i.hi; },
                          [&](const AxisBox& b) {
                              for (std::size_t j = 0; j < p.dim(); ++j) {
                                  const double lo = b.center[j] - b.half_side;
                                  const double hi = b.center[j] + b.half_side;
                                  if (!(lo <= p[j] && p[j] <= hi)) return false;
                              }
                              return true;
                          },
                          [&](const Ball& b) {
                              const Point d = p - b.center;
                              const double r = b.radius + tol;
                              return dot(d, d) <= r * r;
                          },
                          [&](const ConvexPolygon2D& poly) {
                              const auto& v = poly.vertices;
                              for (std::size_t i = 0; i < v.size(); ++i) {
                                  if (edge_signed_distance(v[i], v[(i + 1) % v.size()], p) < -tol) return false;
                              }
                              return true;
                          },
                          [&](const AxisEllipse2D& e) {
                              const auto [ax, ay] = ellipse_axes(e);
                              const double u = (p[0] - e.center[0]) / (ax + tol);
                              const double w = (p[1] - e.center[1]) / (ay + tol);
                              return u * u + w * w <= 1.0;
                          },
                      },
                      s);
}

Point shape_center(const Shape& s, Norm norm) {
    return std::visit(overloaded{
                          [](const Interval& i) { return Point{0.5 * (i.lo + i.hi)}; },
                          [](const AxisBox& b) { return b.center; },
                          [](const Ball& b) { return b.center; },
                          [&](const ConvexPolygon2D& p) { return polygon_center(p, norm); },
                          [](const AxisEllipse2D& e) { return e.center; },
                      },
                      s);
}

FatMetrics fat_metrics(const Shape& s, Norm norm) {
    FatMetrics m;
    m.norm = norm;
    m.center = shape_center(s, norm);
    std::visit(overloaded{
                   [&](const Interval& i) {
                       m.width = m.height = 0.5 * (i.hi - i.lo);
                   },
                   [&](const AxisBox& b) {
                       m.width = b.half_side;
                       m.height = norm == Norm::LInf ? b.half_side
                                                     : b.half_side * std::sqrt(static_cast<double>(b.center.dim()));
                   },
                   [&](const Ball& b) {
                       m.width = norm == Norm::L2 ? b.radius : b.radius / std::sqrt(static_cast<double>(b.center.dim()));
                       m.height = b.radius;
                   },
                   [&](const ConvexPolygon2D& p) {
                       const auto d = polygon_boundary_distances(p, m.center, norm);
                       m.width = d.min;
                       m.height = d.max;
                   },
                   [&](const AxisEllipse2D& e) {
                       if (norm == Norm::L2) {
                           m.width = e.semi_minor;
                       } else {
                           // corner of the largest inscribed axis-aligned square lies on the diagonal
                           const double a = e.semi_minor, b = e.semi_major;
                           m.width = a * b / std::sqrt(a * a + b * b);
                       }
                       m.height = e.semi_major;
                   },
               },
               s);
    m.alpha = m.width / m.height;
    return m;
}

Shape reflect(const Shape& s, const Point& c) {
    require_dim(dimension(s), c);
    return std::visit(overloaded{
                          [&](const Interval& i) -> Shape { return Interval{2.0 * c[0] - i.hi, 2.0 * c[0] - i.lo}; },
                          [&](const AxisBox& b) -> Shape { return AxisBox{2.0 * c - b.center, b.half_side}; },
                          [&](const Ball& b) -> Shape { return Ball{2.0 * c - b.center, b.radius}; },
                          [&](const ConvexPolygon2D& p) -> Shape {
                              // a point reflection in the plane is a half-turn, so CCW order survives
                              std::vector<Point> out;
                              out.reserve(p.vertices.size());
                              for (const auto& v : p.vertices) out.push_back(2.0 * c - v);
                              return ConvexPolygon2D{std::move(out)};
                          },
                          [&](const AxisEllipse2D& e) -> Shape {
                              return AxisEllipse2D{2.0 * c - e.center, e.semi_minor, e.semi_major, e.major_axis};
                          },
                      },
                      s);
}

Shape translate(const Shape& s, const Point& v) {
    require_dim(dimension(s), v);
    return std::visit(overloaded{
                          [&](const Interval& i) -> Shape { return Interval{i.lo + v[0], i.hi + v[0]}; },
                          [&](const AxisBox& b) -> Shape { return AxisBox{b.center + v, b.half_side}; },
                          [&](const Ball& b) -> Shape { return Ball{b.center + v, b.radius}; },
                          [&](const ConvexPolygon2D& p) -> Shape {
                              std::vector<Point> out;
                              out.reserve(p.vertices.size());
                              for (const auto& q : p.vertices) out.push_back(q + v);
                              return ConvexPolygon2D{std::move(out)};
                          },
                          [&](const AxisEllipse2D& e) -> Shape {
                              return AxisEllipse2D{e.center + v, e.semi_minor, e.semi_major, e.major_axis};
                          },
                      },
                      s);
}

double scale_of(const Shape& s) {
    return std::visit(overloaded{
                          [](const Interval& i) { return i.hi - i.lo; },
                          [](const AxisBox& b) { return 2.0 * b.half_side; },
                          [](const Ball& b) { return b.radius; },
                          [&](const ConvexPolygon2D&) { return fat_metrics(s, Norm::L2).width; },
                          [](const AxisEllipse2D& e) { return e.semi_minor; },
                      },
                      s);
}

double gauge(const Shape& c, const Point& v) {
    require_dim(dimension(c), v);
    if (!origin_interior(c)) throw std::invalid_argument("convex distance needs the origin in the interior of C");
    return std::visit(overloaded{
                          [&](const Interval& i) {
                              return v[0] > 0.0 ? v[0] / i.hi : (v[0] < 0.0 ? v[0] / i.lo : 0.0);
                          },
                          [&](const AxisBox& b) {
                              double g = 0.0;
                              for (std::size_t j = 0; j < v.dim(); ++j) {
                                  const double lo = b.center[j] - b.half_side;
                                  const double hi = b.center[j] + b.half_side;
                                  if (v[j] > 0.0) g = std::max(g, v[j] / hi);
                                  if (v[j] < 0.0) g = std::max(g, v[j] / lo);
                              }
                              return g;
                          },
                          [&](const Ball& b) { return ball_gauge(b.center, b.radius, v); },
                          [&](const ConvexPolygon2D& p) {
                              double g = 0.0;
                              const auto& vs = p.vertices;
                              for (std::size_t i = 0; i < vs.size(); ++i) {
                                  const Point& a = vs[i];
                                  const Point& b = vs[(i + 1) % vs.size()];
                                  const Point n{b[1] - a[1], a[0] - b[0]};  // outward for CCW order
                                  g = std::max(g, dot(n, v) / dot(n, a));
                              }
                              return g;
                          },
                          [&](const AxisEllipse2D& e) {
                              const auto [ax, ay] = ellipse_axes(e);
                              return ball_gauge(Point{e.center[0] / ax, e.center[1] / ay}, 1.0,
                                                Point{v[0] / ax, v[1] / ay});
                          },
                      },
                      c);
}

double convex_distance(const Shape& c, const Point& x, const Point& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch between x and y");
    return gauge(c, y - x);
}

HyperRect to_hyperrect(const AxisBox& b) {
    HyperRect r;
    for (std::size_t j = 0; j < b.center.dim(); ++j) {
        r.lo.push_back(b.center[j] - b.half_side);
        r.hi.push_back(b.center[j] + b.half_side);
    }
    return r;
}

HyperRect to_hyperrect(const Interval& i) { return HyperRect{{i.lo}, {i.hi}}; }

HyperRect bounding_box(const Shape& s) {
    return std::visit(overloaded{
                          [](const Interval& i) { return to_hyperrect(i); },
                          [](const AxisBox& b) { return to_hyperrect(b); },
                          [](const Ball& b) {
                              HyperRect r;
                              for (double c : b.center.coords()) {
                                  r.lo.push_back(c - b.radius);
                                  r.hi.push_back(c + b.radius);
                              }
                              return r;
                          },
                          [](const ConvexPolygon2D& p) {
                              HyperRect r{{p.vertices[0][0], p.vertices[0][1]}, {p.vertices[0][0], p.vertices[0][1]}};
                              for (const auto& v : p.vertices) {
                                  for (std::size_t j = 0; j < 2; ++j) {
                                      r.lo[j] = std::min(r.lo[j], v[j]);
                                      r.hi[j] = std::max(r.hi[j], v[j]);
                                  }
                              }
                              return r;
                          },
                          [](const AxisEllipse2D& e) {
                              const auto [ax, ay] = ellipse_axes(e);
                              return HyperRect{{e.center[0] - ax, e.center[1] - ay}, {e.center[0] + ax, e.center[1] + ay}};
                          },
                      },
                      s);
}

std::optional<HyperRect> box_common_intersection(std::span<const HyperRect> boxes) {
    if (boxes.empty()) throw std::invalid_argument("box_common_intersection needs at least one box");
    HyperRect out = boxes.front();
    for (const auto& b : boxes.subspan(1)) {
        if (b.dim() != out.dim()) throw std::invalid_argument("box_common_intersection: dimension mismatch");
        for (std::size_t j = 0; j < out.dim(); ++j) {
            out.lo[j] = std::max(out.lo[j], b.lo[j]);
            out.hi[j] = std::min(out.hi[j], b.hi[j]);
        }
    }
    for (std::size_t j = 0; j < out.dim(); ++j) {
        if (out.lo[j] > out.hi[j]) return std::nullopt;
    }
    return out;
}

bool approx_equal(const Shape& a, const Shape& b, double tol) {
    if (a.index() != b.index()) return false;
    auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
    return std::visit(
        overloaded{
            [&](const Interval& x) {
                const auto& y = std::get<Interval>(b);
                return close(x.lo, y.lo) && close(x.hi, y.hi);
            },
            [&](const AxisBox& x) {
                const auto& y = std::get<AxisBox>(b);
                return approx_equal(x.center, y.center, tol) && close(x.half_side, y.half_side);
            },
            [&](const Ball& x) {
                const auto& y = std::get<Ball>(b);
                return approx_equal(x.center, y.center, tol) && close(x.radius, y.radius);
            },
            [&](const ConvexPolygon2D& x) {
                const auto& y = std::get<ConvexPolygon2D>(b);
                if (x.vertices.size() != y.vertices.size()) return false;
                for (const auto& v : x.vertices) {
                    const bool found = std::any_of(y.vertices.begin(), y.vertices.end(),
                                                   [&](const Point& w) { return approx_equal(v, w, tol); });
                    if (!found) return false;
                }
                return true;
            },
            [&](const AxisEllipse2D& x) {
                const auto& y = std::get<AxisEllipse2D>(b);
                return approx_equal(x.center, y.center, tol) && close(x.semi_minor, y.semi_minor) &&
                       close(x.semi_major, y.semi_major) &&
                       (x.major_axis == y.major_axis || close(x.semi_minor, x.semi_major));
            },
        },
        a);
}

}  // namespace pierce
