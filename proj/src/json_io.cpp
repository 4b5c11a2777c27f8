#include "pierce/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pierce {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("shape JSON is missing field '") + name + "'");
    }
    return j.at(name);
}

double number(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number()) throw std::invalid_argument(std::string("field '") + name + "' must be a number");
    return v.get<double>();
}

}  // namespace

json to_json(const Point& p) { return json(p.coords()); }

json to_json(const Shape& s) {
    return std::visit(overloaded{
                          [](const Interval& i) { return json{{"kind", "interval"}, {"lo", i.lo}, {"hi", i.hi}}; },
                          [](const AxisBox& b) {
                              return json{{"kind", "axis_box"}, {"center", to_json(b.center)}, {"half_side", b.half_side}};
                          },
                          [](const Ball& b) {
                              return json{{"kind", "ball"}, {"center", to_json(b.center)}, {"radius", b.radius}};
                          },
                          [](const ConvexPolygon2D& p) {
                              json vs = json::array();
                              for (const auto& v : p.vertices) vs.push_back(to_json(v));
                              return json{{"kind", "polygon"}, {"vertices", vs}};
                          },
                          [](const AxisEllipse2D& e) {
                              return json{{"kind", "ellipse"},
                                          {"center", to_json(e.center)},
                                          {"semi_minor", e.semi_minor},
                                          {"semi_major", e.semi_major},
                                          {"major_axis", e.major_axis}};
                          },
                      },
                      s);
}

json to_json(const HyperRect& r) { return json{{"lo", r.lo}, {"hi", r.hi}}; }

Point point_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("point JSON must be an array of numbers");
    std::vector<double> c;
    for (const auto& x : j) {
        if (!x.is_number()) throw std::invalid_argument("point JSON must be an array of numbers");
        c.push_back(x.get<double>());
    }
    return Point(std::move(c));
}

Shape shape_from_json(const json& j) {
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) throw std::invalid_argument("shape 'kind' must be a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "interval") return make_interval(number(j, "lo"), number(j, "hi"));
    if (kind == "axis_box") return make_box(point_from_json(field(j, "center")), number(j, "half_side"));
    if (kind == "ball") return make_ball(point_from_json(field(j, "center")), number(j, "radius"));
    if (kind == "polygon") {
        std::vector<Point> vs;
        for (const auto& v : field(j, "vertices")) vs.push_back(point_from_json(v));
        return make_polygon(std::move(vs));
    }
    if (kind == "ellipse") {
        const int axis = j.contains("major_axis") ? j.at("major_axis").get<int>() : 1;
        return make_ellipse(point_from_json(field(j, "center")), number(j, "semi_minor"), number(j, "semi_major"), axis);
    }
    throw std::invalid_argument("unknown shape kind '" + kind + "'");
}

json shapes_to_json(const std::vector<Shape>& shapes) {
    json out = json::array();
    for (const auto& s : shapes) out.push_back(to_json(s));
    return out;
}

std::vector<Shape> shapes_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("instance JSON must be a list of shapes");
    std::vector<Shape> out;
    for (const auto& s : j) out.push_back(shape_from_json(s));
    return out;
}

json points_to_json(const std::vector<Point>& points) {
    json out = json::array();
    for (const auto& p : points) out.push_back(to_json(p));
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace pierce
