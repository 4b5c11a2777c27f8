#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pierce/piercing.hpp"

namespace pierce {

struct PropertyResult {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

using VertexStepFn = std::function<std::vector<Point>(const PiercingSet&, const Shape&, double)>;

struct VerifyOptions {
    // The step checked by the vertex point-count property; swapped out by the mutation check.
    VertexStepFn vertex_step = [](const PiercingSet& s, const Shape& o, double tol) { return pierce::vertex_step(s, o, tol); };
};

/// A deliberately broken vertex step: always the 2^d corners of an unpierced box.
std::vector<Point> vertex_step_corners_only(const PiercingSet& state, const Shape& object, double tol);

/// Runs the invariant suite of every module. `on_result` is called as each property finishes.
std::vector<PropertyResult> run_verify(const VerifyOptions& options = {},
                                       const std::function<void(const PropertyResult&)>& on_result = {});

}  // namespace pierce
