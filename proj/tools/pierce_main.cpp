#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pierce/adversary.hpp"
#include "pierce/harness.hpp"
#include "pierce/verify.hpp"

using namespace pierce;

namespace {

int cmd_run(const std::string& config_path, const std::string& out_path) {
    ScenarioConfig cfg = config_from_json(read_json_file(config_path));
    if (!out_path.empty()) cfg.output = out_path;
    const ScenarioOutcome o = run_scenario(cfg);
    std::cout << to_json(o.result).dump(2) << '\n';
    if (!cfg.output.empty()) {
        write_json_file(cfg.output, json{{"config", to_json(cfg)},
                                         {"result", to_json(o.result)},
                                         {"opt", to_json(o.opt)},
                                         {"detail", o.detail},
                                         {"transcript", to_json(o.transcript)}});
    }
    for (const auto& v : o.result.violations) std::cerr << "violation: " << v << '\n';
    return o.result.ok() ? 0 : 1;
}

int cmd_sweep(const std::string& grid_path, const std::string& out_path, unsigned threads) {
    const auto configs = expand_grid(read_json_file(grid_path));
    const auto rows = sweep(configs, threads);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    write_csv(out, rows);
    out.close();
    if (!out) throw std::runtime_error("failed writing " + out_path);
    std::size_t failed = 0;
    for (const auto& r : rows) {
        if (r.ok()) continue;
        ++failed;
        for (const auto& v : r.violations) std::cerr << r.scenario_id << ": " << v << '\n';
    }
    std::cerr << rows.size() << " scenarios, " << failed << " with violations -> " << out_path << '\n';
    return failed == 0 ? 0 : 1;
}

int cmd_verify(const std::string& mutate) {
    VerifyOptions opts;
    if (mutate == "vertex-corners")
        opts.vertex_step = vertex_step_corners_only;
    else if (!mutate.empty())
        throw std::invalid_argument("unknown mutation '" + mutate + "'");
    std::size_t failed = 0, total = 0;
    run_verify(opts, [&](const PropertyResult& r) {
        ++total;
        if (!r.pass) ++failed;
        std::printf("%s  %-11s %s (%s) [%.0f ms]\n", r.pass ? "PASS" : "FAIL", r.module.c_str(), r.name.c_str(),
                    r.detail.c_str(), r.ms);
        std::fflush(stdout);
    });
    std::printf("%zu/%zu properties passed\n", total - failed, total);
    return failed == 0 ? 0 : 1;
}

int cmd_dump(const std::string& tag, double k, std::size_t d, const std::string& out_path, const std::string& algorithm,
             std::uint64_t seed, double eps, double eps1, double alpha, std::size_t n) {
    auto adv = make_adversary(tag, d, k, eps, eps1, alpha, n);
    auto alg = make_algorithm(algorithm, seed);
    const AdversaryRun run = play(*adv, *alg);
    json j = to_json(run, *adv);
    j["algorithm"] = algorithm;
    j["k"] = k;
    j["d"] = d;
    write_json_file(out_path, j);
    std::cerr << tag << ": " << run.transcript.rounds.size() << " rounds, " << run.alg_points() << " points, "
              << run.violations.size() << " violations -> " << out_path << '\n';
    return run.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online piercing experiments"};
    app.require_subcommand(1);

    std::string config_path, run_out;
    auto* run = app.add_subcommand("run", "Run one scenario from a JSON config");
    run->add_option("--config", config_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--out", run_out, "Write config, result, OPT and transcript here");

    std::string grid_path, csv_path;
    unsigned threads = 0;
    auto* sw = app.add_subcommand("sweep", "Run a grid of scenarios into a CSV");
    sw->add_option("--grid", grid_path, "Grid JSON")->required()->check(CLI::ExistingFile);
    sw->add_option("--out", csv_path, "Output CSV")->required();
    sw->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::string mutate;
    auto* ver = app.add_subcommand("verify", "Run the invariant suite");
    ver->add_option("--mutate", mutate, "Inject a known bug (vertex-corners) to see the suite catch it");

    std::string tag, dump_out, algorithm = "center";
    double k = 16, eps = 0.01, eps1 = 0.01, alpha = 0.5;
    std::size_t d = 2, n = 50;
    std::uint64_t seed = 0;
    auto* dump = app.add_subcommand("dump-adversary", "Play an adversary and dump its demands as JSON");
    dump->add_option("--tag", tag, "interval_nest | alpha_fat_nest | chained_gss | unit_illumination | gsr3d | gsr2d")
        ->required();
    dump->add_option("--k", k, "Scale bound")->required();
    dump->add_option("--d", d, "Dimension")->required();
    dump->add_option("--out", dump_out, "Output JSON")->required();
    dump->add_option("--algorithm", algorithm, "Opponent algorithm");
    dump->add_option("--seed", seed, "Seed for random_point");
    dump->add_option("--eps", eps, "Hypercube and ellipse margin");
    dump->add_option("--eps1", eps1, "Ball shrink slack");
    dump->add_option("--alpha", alpha, "Aspect ratio for alpha_fat_nest");
    dump->add_option("--n", n, "Rounds for interval_nest");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run) return cmd_run(config_path, run_out);
        if (*sw) return cmd_sweep(grid_path, csv_path, threads);
        if (*ver) return cmd_verify(mutate);
        if (*dump) return cmd_dump(tag, k, d, dump_out, algorithm, seed, eps, eps1, alpha, n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
