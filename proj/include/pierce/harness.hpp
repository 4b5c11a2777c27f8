#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/json_io.hpp"
#include "pierce/oracle.hpp"
#include "pierce/piercing.hpp"

namespace pierce {

struct StreamSpec {
    enum class Kind { Adversary, Random };
    Kind kind = Kind::Random;
    std::string tag;          // adversary tag
    std::uint64_t seed = 0;   // random streams
    std::size_t clusters = 1; // m
    double spread = 0.0;      // side of the cluster cube; 0 means 2k
};

/// One experiment. JSON form:
///   {"id": "gss-d2", "d": 2, "shape": "hypercube", "k": 16, "n": 30,
///    "algorithm": "center", "stream": {"adversary": "chained_gss"}
///                        or {"random": {"seed": 1, "clusters": 3, "spread": 20}},
///    "alpha": 1, "eps": 0.01, "eps1": 0.01, "tol": 1e-9, "oracle_max_n": 15,
///    "algorithm_seed": 7, "output": "run.json"}
/// Shapes: interval (d = 1), hypercube, ball (d >= 2), ellipse (d = 2, aspect alpha).
struct ScenarioConfig {
    std::string id = "scenario";
    std::size_t d = 2;
    std::string shape = "hypercube";
    double k = 2.0;
    std::size_t n = 10;
    std::string algorithm = "center";
    std::optional<std::uint64_t> algorithm_seed;  // random_point only; defaults to the stream seed
    StreamSpec stream;
    double alpha = 1.0;
    double eps = 0.01;
    double eps1 = 0.01;
    double tol = kDefaultTol;
    std::size_t oracle_max_n = 15;
    std::string output;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    std::string stream_label() const;
    std::uint64_t seed() const;
};

ScenarioConfig config_from_json(const json& j);
json to_json(const ScenarioConfig& c);

struct RunResult {
    std::string scenario_id;
    std::size_t d = 0;
    std::string shape;
    double k = 0.0;
    std::string algorithm;
    std::string stream;
    std::size_t n_objects = 0;
    std::size_t alg_points = 0;
    std::size_t opt_lower = 0;
    std::size_t opt_upper = 0;
    std::string opt_method;
    double ratio = 0.0;     // alg_points / opt_lower
    double bound_lb = 0.0;  // NaN when no lower-bound construction applies
    double bound_ub = 0.0;  // NaN when no ceiling applies to this algorithm and class
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    std::uint64_t transcript_hash = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
};

json to_json(const RunResult& r);

/// Random stream: m cluster points uniform in [0, spread]^d; each object picks a
/// cluster, draws its scale log-uniformly from [1, k] and is translated so that it
/// contains the cluster point. Deterministic per seed.
std::vector<Shape> random_stream(const ScenarioConfig& c, std::vector<Point>* clusters = nullptr,
                                 std::vector<std::size_t>* owner = nullptr);

struct ScenarioOutcome {
    RunResult result;
    GameTranscript transcript;
    OptResult opt;
    json detail;  // adversary dump or stream description
};

/// Plays one scenario and checks its invariants; failures land in result.violations.
/// Throws std::invalid_argument for an invalid configuration.
ScenarioOutcome run_scenario(const ScenarioConfig& c);

/// Ceiling for the algorithm on the shape class, NaN when none applies.
double scenario_upper_bound(const ScenarioConfig& c, double k);
/// Floor of the construction behind an adversary stream, NaN for random streams.
double scenario_lower_bound(const ScenarioConfig& c);

/// Grid file: {"base": {...}, "grid": {"k": [2, 4], "stream.random.seed": [0, 1]},
/// "scenarios": [{...}, ...]}. Grid keys are dotted paths into the config; every
/// scenario and every grid point is merged over "base". A bare array is a list of configs.
std::vector<ScenarioConfig> expand_grid(const json& j);

/// Runs every scenario (on up to `threads` workers, 0 = hardware concurrency) and
/// returns the results in input order. Configuration errors become violations.
std::vector<RunResult> sweep(const std::vector<ScenarioConfig>& configs, unsigned threads = 0);

const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string csv_row(const RunResult& r);
void write_csv(std::ostream& out, const std::vector<RunResult>& rows);

}  // namespace pierce
