#pragma once

#include <cstddef>
#include <string>

namespace pierce {

struct BoundParams {
    double alpha = 1.0;
    double k = 1.0;
    std::size_t d = 1;
    double eps = 0.0;
    double eps1 = 0.0;
    std::size_t n = 0;  // round count, for the interval bound only

    /// x = (sqrt(1 + 4 alpha^2) - 1) / 2
    double x() const;
    /// 0.5 * acos(1/2 + 1 / (1 + sqrt(1 + 4 alpha^2)))
    double theta3d() const;
    /// acos(1/2 + 1 / (1 + sqrt(1 + 4 alpha^2)))
    double theta2d() const;
    void validate() const;
};

enum class UpperClass { AspectInfFat, Fat2d, Fat3d };
enum class LowerClass { Fat2d, Hypercube, Ball3d, Ball2d, UnitHypercube, Interval };

UpperClass upper_class_from(const std::string& name);
LowerClass lower_class_from(const std::string& name);

/// Algorithm-Center ceilings:
///   aspect_inf_fat: (2/a)^d ((1+a)^d - 1) log_{1+a}(2k/a) + 1
///   fat3d:          2 / (1 - cos t3) * ceil(log_{1+x}(2k/a)) + 1
///   fat2d:          max(fat2d_statement, fat2d_proof)
double ub_center(UpperClass c, const BoundParams& p);
/// (2 pi / t2) log_{1+x}(2k/a) + 1
double fat2d_statement(const BoundParams& p);
/// (pi / t2) (log_{1+x}(2k/a) + 1) + 1
double fat2d_proof(const BoundParams& p);
/// 2^d (2^d - 1) log2(k) + 1, the short printed hypercube form. Documentation only:
/// substituting a = 1 into the general aspect_inf_fat form gives log2(2k) instead.
double hypercube_center_printed(double k, std::size_t d);

/// Algorithm-Vertex ceiling 3^d log2(k) + 2^d.
double ub_vertex(double k, std::size_t d);

/// Floors of the lower-bound formulas (round counts an adversary can realize):
///   fat2d:          floor(log_{2/a} k)
///   hypercube:      d floor(log2(k / (1 + 2 eps))) + 2^d
///   ball3d:         3 floor(log_4 k) + 1
///   ball2d:         2 floor(log_{8/3} k) + 1
///   unit_hypercube: 2^d
///   interval:       n
double lb(LowerClass c, const BoundParams& p);
/// Ball bounds with the (4 + eps1) / (8/3 + eps1) base that the constructions realize.
double lb_ball_eps_base(std::size_t d, double k, double eps1);

/// floor that forgives round-off just below an integer (log_4 64 = 2.9999...).
double robust_floor(double v);

}  // namespace pierce
