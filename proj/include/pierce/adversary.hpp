#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"
#include "pierce/piercing.hpp"

namespace pierce {

/// Next object demanded by an adversary. `must_add` is the adversary's claim that
/// the object avoids every point placed so far.
struct RoundDemand {
    Shape object;
    bool must_add = true;
};

/// Adaptive lower-bound game generator. next() sees every point placed so far and
/// the points added in answer to the previous demand; it returns nullopt once the
/// construction is exhausted.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual std::string tag() const = 0;
    virtual std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) = 0;
    /// A point inside every object emitted so far.
    virtual Point witness() const = 0;
    /// Round count the construction promises against any single-point algorithm.
    virtual std::size_t promised_rounds() const = 0;
    /// Failed self-certifications (numeric checks of the construction's invariants).
    const std::vector<std::string>& certification_failures() const { return failures_; }
    /// Free-form notes about deviations taken during the game (restarts, exhausted searches).
    const std::vector<std::string>& notes() const { return notes_; }

protected:
    void fail(std::string why) { failures_.push_back(std::move(why)); }
    void note(std::string what) { notes_.push_back(std::move(what)); }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

/// Guard shared by every construction: margins must dominate the containment tolerance.
void require_margin(double eps, double tol, const char* what);

// ---------------------------------------------------------------------------
// Nested intervals, unbounded scale. Starter [0, 2^(n+1)]; each later interval
// is the larger point-free part of the previous one, pulled back by delta from
// the points bounding it. Ties go to the right.
class IntervalNestAdversary final : public Adversary {
public:
    explicit IntervalNestAdversary(std::size_t n, double delta = 1e-3, double tol = kDefaultTol);

    std::string tag() const override { return "interval_nest"; }
    std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) override;
    Point witness() const override;
    std::size_t promised_rounds() const override { return n_; }

    /// One step of the construction on its own: the interval that follows `current`
    /// once `points` have been placed.
    static Interval follow(const Interval& current, std::span<const Point> points, double delta);

private:
    std::size_t n_;
    double delta_;
    std::optional<Interval> current_;
    std::size_t emitted_ = 0;
};

// ---------------------------------------------------------------------------
// Nested axis-aligned ellipses of aspect ratio alpha (major axis vertical).
// Round i has semi-minor w_i = k (alpha / (2 + eps))^(i-1); the next center moves
// by w_i / 2 along x, away from the side holding the last point.
class AlphaFatNestAdversary final : public Adversary {
public:
    AlphaFatNestAdversary(double alpha, double k, double eps = 0.01, double tol = kDefaultTol);

    std::string tag() const override { return "alpha_fat_nest"; }
    std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) override;
    Point witness() const override { return center_; }
    std::size_t promised_rounds() const override { return rounds_; }

    double width_of_round(std::size_t i) const;  // 1-based

private:
    double alpha_, k_, eps_;
    std::size_t rounds_;
    std::size_t emitted_ = 0;
    Point center_{0.0, 0.0};
};

// ---------------------------------------------------------------------------
// One GSS(r) game in a translated frame: d hypercubes of side r. After each answer
// point the game fixes the sign of one unused axis and shifts every later cube by
// s (r/2 + eps) along it. The default axis order is 0, 1, ..., d-1.
class GssGame {
public:
    GssGame(Point origin, double r, double eps);

    std::size_t dim() const { return origin_.dim(); }
    std::size_t emitted() const { return boxes_.size(); }
    bool finished() const { return axes_.size() == dim(); }
    double side() const { return r_; }
    const Point& origin() const { return origin_; }

    /// Next hypercube of the game (one observation per emitted box required).
    Shape planned() const;
    /// The hypercube that would follow if `p` fixed the sign of `axis`.
    Shape planned_after(const Point& p, std::size_t axis) const;
    /// The hypercube shifted by s_j (r/2 + eps) on every axis j with s_j != 0.
    Shape cube_for(const std::vector<int>& signs) const;
    int sign_for(const Point& p, std::size_t axis) const;
    void record_emitted(const Shape& box);
    const Shape& last_emitted() const { return last_; }

    /// Sign rule: +1 when the point's coordinate on `axis` is strictly below the
    /// frame center, -1 otherwise. The one-argument form uses the lowest unused axis.
    void observe(const Point& p);
    void observe(const Point& p, std::size_t axis);
    std::vector<std::size_t> unused_axes() const;

    /// Running intersection Q_i of the boxes emitted so far.
    HyperRect running_intersection() const;
    /// Sides promised for Q_i: r/2 - eps on the first i-1 axes used, r on the rest.
    std::vector<double> promised_sides() const;
    /// The empty hypercube E of side r/2 - eps (needs finished()).
    HyperRect empty_cube() const;
    /// Per-coordinate signs; 0 for an axis not used yet.
    const std::vector<int>& signs() const { return sign_; }
    const std::vector<std::size_t>& axes() const { return axes_; }
    /// The point observed for each used axis, in order.
    const std::vector<Point>& answers() const { return answers_; }

private:
    Point shifted_center(const std::vector<int>& signs) const;

    Point origin_;
    double r_, eps_;
    std::vector<int> sign_;
    std::vector<std::size_t> axes_;
    std::vector<Point> answers_;
    std::vector<HyperRect> boxes_;
    Shape last_;
};

/// Grid search for the next unit-hypercube center of the illumination stage.
/// Candidates come from the (1 + eps_k)-neighborhood of the tightest unit container
/// of `centers` at pitch eps_k / 4. A candidate must keep L-infinity distance
/// > 1/2 from every placed point, keep the coordinate range of all centers below
/// 1 - tol, and leave a nonempty intersection with `container`. Among valid
/// candidates the one leaving the largest margin wins (ties: scan order).
std::optional<Point> illumination_next_center(std::span<const Point> centers, std::span<const Point> placed,
                                              const HyperRect& container, double tol = kDefaultTol);

/// Largest axis-parallel hypercube inside `container` whose closed region keeps
/// distance > `margin` (per coordinate) from every point, capped at side `cap`.
std::optional<HyperRect> largest_empty_cube(const HyperRect& container, std::span<const Point> points, double cap,
                                            double margin);

// ---------------------------------------------------------------------------
// Unit hypercube illumination game: at most 2^d unit hypercubes sharing a point.
class UnitHypercubeIllumination final : public Adversary {
public:
    UnitHypercubeIllumination(std::size_t d, std::size_t rounds = 0, double tol = kDefaultTol);

    std::string tag() const override { return "unit_illumination"; }
    std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) override;
    Point witness() const override;
    std::size_t promised_rounds() const override { return rounds_; }
    const std::vector<Point>& centers() const { return centers_; }

private:
    std::size_t d_, rounds_;
    double tol_;
    std::vector<Point> centers_;
    std::optional<HyperRect> running_;
};

struct GssCertificate {
    double r = 0.0;
    bool intersection_ok = false;  // Q has the promised side lengths
    bool empty_ok = false;         // E inside Q and free of the game's d answer points
    HyperRect empty_cube;
};

// ---------------------------------------------------------------------------
// Chained GSS games (r <- r/2 - eps while the empty cube keeps side >= 1),
// followed by the unit-hypercube illumination stage inside the final empty cube.
// When a planned object would already be pierced (several points per round, or
// points of an earlier game reaching into the current frame), the chain restarts
// from the largest point-free cube inside the running intersection.
class ChainedHypercubeAdversary final : public Adversary {
public:
    ChainedHypercubeAdversary(std::size_t d, double k, double eps = 0.01, double tol = kDefaultTol);

    std::string tag() const override { return "chained_gss"; }
    std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) override;
    Point witness() const override;
    std::size_t promised_rounds() const override;

    std::size_t games_played() const { return games_; }
    std::size_t restarts() const { return restarts_; }
    /// Rounds where the default axis order had to be changed to keep the next cube point-free.
    std::size_t axis_swaps() const { return axis_swaps_; }
    const std::vector<GssCertificate>& certificates() const { return certificates_; }
    /// Number of GSS games the chain plays when no restart is needed.
    std::size_t planned_games() const;

private:
    enum class Phase { Gss, Illumination, Done };

    std::optional<RoundDemand> emit(Shape s);
    std::optional<RoundDemand> start_game(const HyperRect& starter, std::span<const Point> placed);
    std::optional<RoundDemand> start_illumination(const HyperRect& region, std::span<const Point> placed);
    std::optional<RoundDemand> restart(std::span<const Point> placed, double cap);
    double completion_value(std::vector<int>& signs, std::span<const Point> placed) const;
    void finish_game();

    std::size_t d_;
    double k_, eps_, tol_;
    Phase phase_ = Phase::Gss;
    std::optional<GssGame> game_;
    std::vector<Point> illum_centers_;
    std::optional<HyperRect> running_;
    std::size_t games_ = 0;
    std::size_t restarts_ = 0;
    std::size_t axis_swaps_ = 0;
    bool started_ = false;
    std::vector<GssCertificate> certificates_;
};

struct GsrCertificate {
    double r = 0.0;
    double eps = 0.0;
    double max_center_distance = 0.0;  // max_j d(c, c_j)
    double stated_bound = 0.0;         // r (3+eps1)/(4+eps1) in 3-D, r (7/3+eps1)/(8/3+eps1) in 2-D
    double empty_radius = 0.0;
    bool within_stated_bound = false;
    bool contained = false;  // d(c, c_j) + radius(E) <= r for every j
    bool empty = false;      // E avoids every placed point
};

// ---------------------------------------------------------------------------
// Chained game of same-radius balls in R^3 (three balls per game) or R^2 (two).
// Each answer fixes the sign along one shift direction; directions are the canonical
// axes unless that would put an earlier game's point in the next ball, in which case
// another direction orthogonal to the used ones is taken (balls are rotation invariant).
// The empty ball of each game starts the next one while its radius stays >= 1;
// one final ball of radius max(1, radius(E)) containing the last E's center closes it.
// The per-game eps is eps1 * r / 40.
class BallGameAdversary final : public Adversary {
public:
    BallGameAdversary(std::size_t d, double k, double eps1 = 0.01, double tol = kDefaultTol);

    std::string tag() const override { return d_ == 3 ? "gsr3d" : "gsr2d"; }
    std::optional<RoundDemand> next(std::span<const Point> placed, std::span<const Point> last_added) override;
    Point witness() const override { return witness_; }
    std::size_t promised_rounds() const override;

    const std::vector<GsrCertificate>& certificates() const { return certificates_; }
    /// Rounds where the next ball had to leave the canonical axes to stay point-free.
    std::size_t reorientations() const { return reorientations_; }
    /// Radius divisor of the empty ball: 4 + eps1 (3-D) or 8/3 + eps1 (2-D).
    double shrink() const;
    /// Bound on d(c, c_j) stated for the construction, per unit radius.
    double stated_ratio() const;

    /// Empty-ball center for one game in frame coordinates, given the signs s(1..d).
    static Point empty_center(std::size_t d, double r, double eps, double eps1, std::span<const int> signs);

private:
    enum class Phase { Game, Done };

    void finish_game(std::span<const Point> placed);
    std::optional<RoundDemand> final_ball(std::span<const Point> placed);
    Point axis(std::size_t j) const;
    std::vector<Point> candidate_directions() const;
    Point complement_direction() const;

    std::size_t d_;
    double k_, eps1_, tol_;
    Phase phase_ = Phase::Game;
    Point origin_;
    double r_;
    std::vector<int> signs_;
    std::vector<Point> dirs_;  // orthonormal shift directions of the current game
    std::vector<Point> centers_;
    Point witness_;
    std::size_t reorientations_ = 0;
    std::vector<GsrCertificate> certificates_;
    bool final_emitted_ = false;
};

// ---------------------------------------------------------------------------

struct AdversaryRun {
    GameTranscript transcript;
    std::vector<RoundDemand> demands;
    Point witness;
    std::vector<std::string> violations;  // invariant failures observed by the driver
    std::vector<std::string> notes;

    /// Rounds in which the object arrived unpierced and the algorithm had to add a point.
    std::size_t forced_rounds() const;
    std::size_t alg_points() const { return transcript.final_set.size(); }
    bool ok() const { return violations.empty(); }
};

/// Plays an adversary against an algorithm. Checks, every round, that the demanded
/// object avoids all placed points and that the witness lies in every emitted object.
AdversaryRun play(Adversary& adversary, OnlineAlgorithm& algorithm, double tol = kDefaultTol);

std::unique_ptr<Adversary> make_adversary(const std::string& tag, std::size_t d, double k, double eps,
                                          double eps1, double alpha, std::size_t n, double tol = kDefaultTol);

json to_json(const AdversaryRun& run, const Adversary& adversary);

}  // namespace pierce
