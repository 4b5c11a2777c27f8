#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pierce/geometry.hpp"

namespace pierce {

using nlohmann::json;

// Shape encoding:
//   {"kind": "interval", "lo": 0, "hi": 2}
//   {"kind": "axis_box", "center": [x, ...], "half_side": h}
//   {"kind": "ball", "center": [x, ...], "radius": r}
//   {"kind": "polygon", "vertices": [[x, y], ...]}            (CCW)
//   {"kind": "ellipse", "center": [x, y], "semi_minor": a, "semi_major": b, "major_axis": 1}
json to_json(const Point& p);
json to_json(const Shape& s);
json to_json(const HyperRect& r);

Point point_from_json(const json& j);
/// Parses and validates; throws std::invalid_argument on malformed input.
Shape shape_from_json(const json& j);

json shapes_to_json(const std::vector<Shape>& shapes);
std::vector<Shape> shapes_from_json(const json& j);
json points_to_json(const std::vector<Point>& points);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace pierce
