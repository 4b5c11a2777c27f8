#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"

namespace pierce {

/// Append-only point set: the irrevocable output of an online algorithm.
/// Points are keyed after rounding to 12 decimal places, so a vertex shared
/// by two hypercubes is only stored once.
class PiercingSet {
public:
    /// Appends `p` unless an equal point (after rounding) is already present.
    bool add(const Point& p);
    bool has(const Point& p) const;

    std::span<const Point> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    bool pierces(const Shape& s, double tol = kDefaultTol) const;

private:
    static std::vector<double> key(const Point& p);

    std::vector<Point> points_;
    std::set<std::vector<double>> keys_;
};

struct Round {
    Shape object;
    bool pierced_on_arrival = false;
    std::vector<Point> points_added;
};

struct GameTranscript {
    std::vector<Round> rounds;
    PiercingSet final_set;
};

/// One online algorithm. step() sees the current set and the new object and
/// returns the points it wants appended; the game owns the set.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual std::vector<Point> step(const PiercingSet& state, const Shape& object) = 0;
};

// Adds the center of an unpierced object.
std::vector<Point> center_step(const PiercingSet& state, const Shape& object, double tol = kDefaultTol);

// Axis-parallel hypercubes only. An unpierced hypercube of side 1 (within tol)
// gets its 2^d vertices; a larger one gets the 3^d half-grid points, i.e. the
// vertices of its 2^d half-size sub-hypercubes.
std::vector<Point> vertex_step(const PiercingSet& state, const Shape& object, double tol = kDefaultTol);

class AlgorithmCenter final : public OnlineAlgorithm {
public:
    explicit AlgorithmCenter(double tol = kDefaultTol) : tol_(tol) {}
    std::string name() const override { return "center"; }
    std::vector<Point> step(const PiercingSet& state, const Shape& object) override {
        return center_step(state, object, tol_);
    }

private:
    double tol_;
};

class AlgorithmVertex final : public OnlineAlgorithm {
public:
    explicit AlgorithmVertex(double tol = kDefaultTol) : tol_(tol) {}
    std::string name() const override { return "vertex"; }
    std::vector<Point> step(const PiercingSet& state, const Shape& object) override {
        return vertex_step(state, object, tol_);
    }

private:
    double tol_;
};

/// Baseline that adds the center of every object, pierced or not.
class NaiveAlwaysCenter final : public OnlineAlgorithm {
public:
    std::string name() const override { return "naive_always_center"; }
    std::vector<Point> step(const PiercingSet&, const Shape& object) override { return {shape_center(object)}; }
};

/// Places a uniformly random point of an unpierced object (seeded).
class RandomPointPlacer final : public OnlineAlgorithm {
public:
    explicit RandomPointPlacer(std::uint64_t seed, double tol = kDefaultTol) : rng_(seed), tol_(tol) {}
    std::string name() const override { return "random_point"; }
    std::vector<Point> step(const PiercingSet& state, const Shape& object) override;

private:
    std::mt19937_64 rng_;
    double tol_;
};

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, std::uint64_t seed = 0,
                                                double tol = kDefaultTol);

/// Uniform sample from a shape; used by the random placer and stream generators.
Point sample_inside(const Shape& s, std::mt19937_64& rng);

/// Drives one online game. Each present() call invokes the algorithm exactly
/// once; the object must be pierced afterwards or std::logic_error is thrown.
class OnlineGame {
public:
    explicit OnlineGame(OnlineAlgorithm& algorithm, double tol = kDefaultTol) : algorithm_(algorithm), tol_(tol) {}

    const Round& present(const Shape& object);

    const PiercingSet& set() const { return transcript_.final_set; }
    const GameTranscript& transcript() const { return transcript_; }
    GameTranscript take_transcript() { return std::move(transcript_); }
    double tol() const { return tol_; }

private:
    OnlineAlgorithm& algorithm_;
    double tol_;
    std::size_t dim_ = 0;
    GameTranscript transcript_;
};

GameTranscript run_online(OnlineAlgorithm& algorithm, std::span<const Shape> stream, double tol = kDefaultTol);

json to_json(const GameTranscript& t);
/// Structural checks: the final set is the concatenation of points_added and every
/// round's object is pierced by the prefix of the set that exists at its end.
bool transcript_consistent(const GameTranscript& t, double tol = kDefaultTol);
/// FNV-1a over the canonical JSON dump; used for determinism checks.
std::uint64_t transcript_hash(const GameTranscript& t);

}  // namespace pierce
