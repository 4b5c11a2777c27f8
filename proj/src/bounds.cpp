#include "pierce/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace pierce {

namespace {

double log_base(double base, double v) { return std::log(v) / std::log(base); }

double pow2(std::size_t d) { return std::ldexp(1.0, static_cast<int>(d)); }

}  // namespace

double robust_floor(double v) { return std::floor(v + 1e-9); }

double BoundParams::x() const { return (std::sqrt(1.0 + 4.0 * alpha * alpha) - 1.0) / 2.0; }

double BoundParams::theta2d() const { return std::acos(0.5 + 1.0 / (1.0 + std::sqrt(1.0 + 4.0 * alpha * alpha))); }

double BoundParams::theta3d() const { return 0.5 * theta2d(); }

void BoundParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("bounds: alpha must lie in (0, 1]");
    if (!(k >= 1.0)) throw std::invalid_argument("bounds: k must be at least 1");
    if (d < 1) throw std::invalid_argument("bounds: d must be at least 1");
    if (eps < 0.0 || eps1 < 0.0) throw std::invalid_argument("bounds: eps and eps1 must be non-negative");
}

UpperClass upper_class_from(const std::string& name) {
    if (name == "aspect_inf_fat") return UpperClass::AspectInfFat;
    if (name == "fat2d") return UpperClass::Fat2d;
    if (name == "fat3d") return UpperClass::Fat3d;
    throw std::invalid_argument("unknown upper-bound class '" + name + "'");
}

LowerClass lower_class_from(const std::string& name) {
    if (name == "fat2d") return LowerClass::Fat2d;
    if (name == "hypercube") return LowerClass::Hypercube;
    if (name == "ball3d") return LowerClass::Ball3d;
    if (name == "ball2d") return LowerClass::Ball2d;
    if (name == "unit_hypercube") return LowerClass::UnitHypercube;
    if (name == "interval") return LowerClass::Interval;
    throw std::invalid_argument("unknown lower-bound class '" + name + "'");
}

double fat2d_statement(const BoundParams& p) {
    p.validate();
    return 2.0 * M_PI / p.theta2d() * log_base(1.0 + p.x(), 2.0 * p.k / p.alpha) + 1.0;
}

double fat2d_proof(const BoundParams& p) {
    p.validate();
    return M_PI / p.theta2d() * (log_base(1.0 + p.x(), 2.0 * p.k / p.alpha) + 1.0) + 1.0;
}

double ub_center(UpperClass c, const BoundParams& p) {
    p.validate();
    const double a = p.alpha;
    switch (c) {
        case UpperClass::AspectInfFat: {
            const double d = static_cast<double>(p.d);
            return std::pow(2.0 / a, d) * (std::pow(1.0 + a, d) - 1.0) * log_base(1.0 + a, 2.0 * p.k / a) + 1.0;
        }
        case UpperClass::Fat3d:
            return 2.0 / (1.0 - std::cos(p.theta3d())) * std::ceil(log_base(1.0 + p.x(), 2.0 * p.k / a) - 1e-12) + 1.0;
        case UpperClass::Fat2d:
            return std::max(fat2d_statement(p), fat2d_proof(p));
    }
    throw std::invalid_argument("ub_center: invalid class");
}

double hypercube_center_printed(double k, std::size_t d) {
    return pow2(d) * (pow2(d) - 1.0) * std::log2(k) + 1.0;
}

double ub_vertex(double k, std::size_t d) {
    if (!(k >= 1.0) || d < 1) throw std::invalid_argument("ub_vertex: needs k >= 1 and d >= 1");
    return std::pow(3.0, static_cast<double>(d)) * std::log2(k) + pow2(d);
}

double lb(LowerClass c, const BoundParams& p) {
    p.validate();
    const double d = static_cast<double>(p.d);
    switch (c) {
        case LowerClass::Fat2d:
            return robust_floor(log_base(2.0 / p.alpha, p.k));
        case LowerClass::Hypercube:
            return d * std::max(0.0, robust_floor(std::log2(p.k / (1.0 + 2.0 * p.eps)))) + pow2(p.d);
        case LowerClass::Ball3d:
            return 3.0 * robust_floor(log_base(4.0, p.k)) + 1.0;
        case LowerClass::Ball2d:
            return 2.0 * robust_floor(log_base(8.0 / 3.0, p.k)) + 1.0;
        case LowerClass::UnitHypercube:
            return pow2(p.d);
        case LowerClass::Interval:
            return static_cast<double>(p.n);
    }
    throw std::invalid_argument("lb: invalid class");
}

double lb_ball_eps_base(std::size_t d, double k, double eps1) {
    if (d == 3) return 3.0 * robust_floor(log_base(4.0 + eps1, k)) + 1.0;
    if (d == 2) return 2.0 * robust_floor(log_base(8.0 / 3.0 + eps1, k)) + 1.0;
    throw std::invalid_argument("lb_ball_eps_base: d must be 2 or 3");
}

}  // namespace pierce
