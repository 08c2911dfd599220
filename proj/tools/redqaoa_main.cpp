// Command-line front end: every capability as a subcommand with
// reproducible seeds and machine-readable JSON output. Data goes to
// stdout or files; diagnostics go to stderr; exit code 0 iff the run
// completed.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "redqaoa/common.hpp"
#include "redqaoa/parallel.hpp"
#include "redqaoa/serialize.hpp"

namespace fs = std::filesystem;
using namespace redqaoa;

namespace {

struct ManifestClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json make_manifest(const std::string& subcommand, json flags,
                   const json& input_fingerprints, const ManifestClock& clock) {
    return json{{"subcommand", subcommand},
                {"flags", std::move(flags)},
                {"version", kVersion},
                {"input_fingerprints", input_fingerprints},
                {"wall_ms", clock.elapsed_ms()}};
}

void emit(const json& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw Error("cannot write " + output_path);
    out << payload.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::optional<NoiseModel> parse_noise(const std::string& arg) {
    if (arg.empty() || arg == "none") return std::nullopt;
    if (!arg.empty() && arg.front() == '{')
        return noise_model_from_json(json::parse(arg));
    std::ifstream in(arg);
    if (!in) throw Error("cannot open noise config " + arg);
    json j;
    in >> j;
    return noise_model_from_json(j);
}

std::vector<std::pair<std::string, Graph>> load_dataset_dir(
    const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".txt" || ext == ".edgelist" || ext == ".edges")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        std::cerr << "warning: no edge-list files (.txt/.edgelist/.edges) in "
                  << dir << "\n";
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& f : files)
        out.emplace_back(fs::path(f).filename().string(), load_edge_list_file(f));
    return out;
}

struct CommonOpts {
    unsigned threads = 0;
    unsigned resolved_threads() const {
        return threads == 0 ? default_thread_count() : threads;
    }
};

void add_threads_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--threads", opts.threads,
                    "worker threads (0 = available parallelism)");
}

int run(int argc, char** argv) {
    CLI::App app{"QAOA-MaxCut graph distillation toolkit"};
    app.require_subcommand(1);

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph edge list");
    struct {
        int cycle = 0;
        std::vector<double> er; // n, p
        std::uint64_t seed = 0;
        std::string output;
    } gen_opts;
    auto* cycle_opt = gen->add_option("--cycle", gen_opts.cycle, "cycle graph size");
    gen->add_option("--er", gen_opts.er, "Erdos-Renyi: N P")
        ->expected(2)
        ->excludes(cycle_opt);
    gen->add_option("--seed", gen_opts.seed, "generator seed");
    gen->add_option("-o,--output", gen_opts.output, "output file (default stdout)");

    gen->callback([&] {
        ManifestClock clock;
        Graph g;
        json flags;
        if (gen->count("--cycle")) {
            g = generate_cycle(static_cast<std::uint32_t>(gen_opts.cycle));
            flags["cycle"] = gen_opts.cycle;
        } else if (gen->count("--er")) {
            g = generate_erdos_renyi(static_cast<std::uint32_t>(gen_opts.er[0]),
                                     gen_opts.er[1], gen_opts.seed);
            flags["er_n"] = gen_opts.er[0];
            flags["er_p"] = gen_opts.er[1];
            flags["seed"] = gen_opts.seed;
        } else {
            throw CLI::ValidationError("gen", "one of --cycle or --er is required");
        }
        const std::string text = to_edge_list(g);
        if (gen_opts.output.empty()) {
            std::cout << text;
        } else {
            write_text(gen_opts.output, text);
            std::cerr << "wrote " << gen_opts.output << " ("
                      << g.node_count() << " nodes, " << g.edge_count()
                      << " edges, fingerprint "
                      << fingerprint_hex(g.fingerprint()) << ", "
                      << clock.elapsed_ms() << " ms)\n";
        }
    });

    // ---- reduce ---------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "distill a graph by annealing");
    struct {
        std::string input, output, emit_reduced;
        double threshold = 0.7;
        int fixed_k = 0;
        std::uint64_t seed = 0;
        std::string cooling = "adaptive";
        int restarts_per_k = 3;
        CommonOpts common;
    } red_opts;
    reduce->add_option("--input", red_opts.input, "edge-list file")->required();
    reduce->add_option("--threshold", red_opts.threshold, "AND-ratio threshold");
    reduce->add_option("--k", red_opts.fixed_k, "fixed subset size (skips the driver)");
    reduce->add_option("--seed", red_opts.seed, "annealing seed");
    reduce->add_option("--cooling", red_opts.cooling, "constant|adaptive")
        ->check(CLI::IsMember({"constant", "adaptive"}));
    reduce->add_option("--restarts-per-k", red_opts.restarts_per_k,
                       "annealing runs per probed size");
    reduce->add_option("--emit-reduced", red_opts.emit_reduced,
                       "also write the reduced edge list here");
    reduce->add_option("-o,--output", red_opts.output, "result JSON file");
    add_threads_flag(reduce, red_opts.common);

    reduce->callback([&] {
        ManifestClock clock;
        const Graph g = load_edge_list_file(red_opts.input);
        SAConfig config;
        config.seed = red_opts.seed;
        config.cooling = red_opts.cooling == "constant" ? CoolingMode::Constant
                                                        : CoolingMode::Adaptive;
        config.restarts_per_k = red_opts.restarts_per_k;
        ReductionResult result =
            red_opts.fixed_k > 0
                ? sa_reduce(g, static_cast<std::uint32_t>(red_opts.fixed_k), config)
                : find_reduced_graph(g, red_opts.threshold, config,
                                     red_opts.common.resolved_threads());
        if (!red_opts.emit_reduced.empty())
            write_text(red_opts.emit_reduced, to_edge_list(result.reduced_graph));
        if (!result.reduced)
            std::cerr << "warning: no feasible reduction below the full graph\n";

        json payload = to_json(result);
        payload["manifest"] = make_manifest(
            "reduce",
            json{{"input", red_opts.input},
                 {"threshold", red_opts.threshold},
                 {"k", red_opts.fixed_k},
                 {"seed", red_opts.seed},
                 {"cooling", red_opts.cooling},
                 {"restarts_per_k", red_opts.restarts_per_k}},
            json{{red_opts.input, fingerprint_hex(g.fingerprint())}}, clock);
        emit(payload, red_opts.output);
    });

    // ---- landscape --------------------------------------------------------
    auto* landscape = app.add_subcommand("landscape", "sample an energy landscape");
    struct {
        std::string input, output, csv, noise;
        int p = 1;
        int grid = 0;
        int random = 0;
        std::uint64_t seed = 0;
        CommonOpts common;
    } land_opts;
    landscape->add_option("--input", land_opts.input, "edge-list file")->required();
    landscape->add_option("--p", land_opts.p, "QAOA layers");
    auto* grid_opt = landscape->add_option("--grid", land_opts.grid,
                                           "grid width per axis (p=1 only)");
    landscape->add_option("--random", land_opts.random, "random sample count")
        ->excludes(grid_opt);
    landscape->add_option("--seed", land_opts.seed, "sampling seed");
    landscape->add_option("--noise", land_opts.noise,
                          "noise config: file, inline JSON, or 'none'");
    landscape->add_option("-o,--output", land_opts.output, "landscape JSON file");
    landscape->add_option("--csv", land_opts.csv, "also write CSV here");
    add_threads_flag(landscape, land_opts.common);

    landscape->callback([&] {
        ManifestClock clock;
        const Graph g = load_edge_list_file(land_opts.input);
        LandscapeSpec spec =
            landscape->count("--grid")
                ? LandscapeSpec::grid(land_opts.grid)
                : LandscapeSpec::random(
                      land_opts.random > 0 ? land_opts.random : 1024,
                      land_opts.seed);
        const auto noise = parse_noise(land_opts.noise);
        const Evaluator eval = noise ? make_noisy_evaluator(*noise, land_opts.seed)
                                     : make_ideal_evaluator(g);
        const auto land = sample_landscape(g, land_opts.p, spec, eval,
                                           land_opts.common.resolved_threads());
        if (!land_opts.csv.empty()) write_text(land_opts.csv, landscape_to_csv(land));

        json payload = to_json(land);
        payload["manifest"] = make_manifest(
            "landscape",
            json{{"input", land_opts.input},
                 {"p", land_opts.p},
                 {"spec", to_json(spec)},
                 {"seed", land_opts.seed},
                 {"noise", land_opts.noise.empty() ? "none" : land_opts.noise}},
            json{{land_opts.input, fingerprint_hex(g.fingerprint())}}, clock);
        emit(payload, land_opts.output);
    });

    // ---- compare ----------------------------------------------------------
    auto* compare = app.add_subcommand("compare", "MSE between two landscapes");
    struct {
        std::string a, b, output;
        int top_k = 1;
    } cmp_opts;
    compare->add_option("--a", cmp_opts.a, "first landscape JSON")->required();
    compare->add_option("--b", cmp_opts.b, "second landscape JSON")->required();
    compare->add_option("--top-k", cmp_opts.top_k, "optima per landscape");
    compare->add_option("-o,--output", cmp_opts.output, "report JSON file");

    compare->callback([&] {
        ManifestClock clock;
        const auto load = [](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw Error("cannot open " + path);
            json j;
            in >> j;
            return landscape_from_json(j);
        };
        const auto a = load(cmp_opts.a);
        const auto b = load(cmp_opts.b);
        const auto report = compare_landscapes(a, b, cmp_opts.top_k);
        json payload = to_json(report);
        payload["manifest"] = make_manifest(
            "compare",
            json{{"a", cmp_opts.a}, {"b", cmp_opts.b}, {"top_k", cmp_opts.top_k}},
            json{{cmp_opts.a, fingerprint_hex(a.graph_fingerprint)},
                 {cmp_opts.b, fingerprint_hex(b.graph_fingerprint)}},
            clock);
        emit(payload, cmp_opts.output);
    });

    // ---- optimize -----------------------------------------------------------
    auto* optimize = app.add_subcommand("optimize", "derivative-free parameter search");
    struct {
        std::string input, output, trace_csv, noise;
        int p = 1;
        int restarts = 0; // 0: pick by layer count
        int max_evals = 150;
        std::uint64_t seed = 0;
        CommonOpts common;
    } opt_opts;
    optimize->add_option("--input", opt_opts.input, "edge-list file")->required();
    optimize->add_option("--p", opt_opts.p, "QAOA layers");
    optimize->add_option("--restarts", opt_opts.restarts,
                         "restarts (default 20/50/150 by layer count)");
    optimize->add_option("--max-evals", opt_opts.max_evals, "evaluations per restart");
    optimize->add_option("--seed", opt_opts.seed, "restart seed");
    optimize->add_option("--noise", opt_opts.noise, "noise config or 'none'");
    optimize->add_option("-o,--output", opt_opts.output, "trace JSON file");
    optimize->add_option("--trace-csv", opt_opts.trace_csv, "full trace CSV");
    add_threads_flag(optimize, opt_opts.common);

    optimize->callback([&] {
        ManifestClock clock;
        const Graph g = load_edge_list_file(opt_opts.input);
        OptimizerConfig config;
        config.restarts = opt_opts.restarts > 0
                              ? opt_opts.restarts
                              : default_restarts_for_layers(opt_opts.p);
        config.max_evals_per_restart = opt_opts.max_evals;
        config.seed = opt_opts.seed;
        const auto noise = parse_noise(opt_opts.noise);
        const auto trace = run_baseline(g, opt_opts.p, noise, config,
                                        opt_opts.common.resolved_threads());
        if (!opt_opts.trace_csv.empty())
            write_text(opt_opts.trace_csv, trace_to_csv(trace));

        json payload = to_json(trace);
        payload["manifest"] = make_manifest(
            "optimize",
            json{{"input", opt_opts.input},
                 {"p", opt_opts.p},
                 {"restarts", config.restarts},
                 {"max_evals", opt_opts.max_evals},
                 {"seed", opt_opts.seed},
                 {"noise", opt_opts.noise.empty() ? "none" : opt_opts.noise}},
            json{{opt_opts.input, fingerprint_hex(g.fingerprint())}}, clock);
        emit(payload, opt_opts.output);
    });

    // ---- pipeline / baseline --------------------------------------------------
    struct PipelineOpts {
        std::string input, dataset_dir, output, trace_csv, noise;
        int p = 1;
        double threshold = 0.7;
        int restarts = 0;
        int max_evals = 150;
        std::uint64_t seed = 0;
        double refine_frac = 0.2;
        bool baseline_arm = false;
        CommonOpts common;
    };

    auto add_pipeline_flags = [](CLI::App* cmd, PipelineOpts& o, bool full) {
        auto* input = cmd->add_option("--input", o.input, "edge-list file");
        if (full)
            cmd->add_option("--dataset-dir", o.dataset_dir,
                            "run on every edge list in a directory")
                ->excludes(input);
        else
            input->required();
        cmd->add_option("--p", o.p, "QAOA layers");
        cmd->add_option("--restarts", o.restarts,
                        "restarts (default 20/50/150 by layer count)");
        cmd->add_option("--max-evals", o.max_evals, "evaluations per restart");
        cmd->add_option("--seed", o.seed, "seed");
        cmd->add_option("--noise", o.noise, "noise config or 'none'");
        if (full) {
            cmd->add_option("--threshold", o.threshold, "AND-ratio threshold");
            cmd->add_option("--refine-frac", o.refine_frac,
                            "budget share of the refinement run");
            cmd->add_flag("--baseline", o.baseline_arm,
                          "also run the same-budget baseline arm");
        }
        cmd->add_option("-o,--output", o.output, "result JSON file");
        cmd->add_option("--trace-csv", o.trace_csv,
                        full ? "trace CSV prefix (writes <prefix>.reduced.csv etc.)"
                             : "trace CSV file");
    };

    auto* pipeline = app.add_subcommand("pipeline", "full distill-optimize-refine flow");
    PipelineOpts pipe_opts;
    add_pipeline_flags(pipeline, pipe_opts, true);
    add_threads_flag(pipeline, pipe_opts.common);

    pipeline->callback([&] {
        ManifestClock clock;
        if (pipe_opts.input.empty() && pipe_opts.dataset_dir.empty())
            throw CLI::ValidationError("pipeline",
                                       "one of --input or --dataset-dir is required");
        PipelineConfig config;
        config.p = pipe_opts.p;
        config.and_ratio_threshold = pipe_opts.threshold;
        config.refine_budget_fraction = pipe_opts.refine_frac;
        config.optimizer.restarts = pipe_opts.restarts > 0
                                        ? pipe_opts.restarts
                                        : default_restarts_for_layers(pipe_opts.p);
        config.optimizer.max_evals_per_restart = pipe_opts.max_evals;
        config.optimizer.seed = pipe_opts.seed;
        config.reduction.seed = pipe_opts.seed;
        config.noise = parse_noise(pipe_opts.noise);
        config.run_baseline_arm = pipe_opts.baseline_arm;
        config.threads = pipe_opts.common.resolved_threads();

        const json flags{{"input", pipe_opts.input},
                         {"dataset_dir", pipe_opts.dataset_dir},
                         {"p", pipe_opts.p},
                         {"threshold", pipe_opts.threshold},
                         {"restarts", config.optimizer.restarts},
                         {"max_evals", pipe_opts.max_evals},
                         {"seed", pipe_opts.seed},
                         {"refine_frac", pipe_opts.refine_frac},
                         {"baseline", pipe_opts.baseline_arm},
                         {"noise", pipe_opts.noise.empty() ? "none" : pipe_opts.noise}};

        const auto run_one = [&](const Graph& g, const std::string& tag) {
            const PipelineResult result = run_red_qaoa(g, config);
            if (!pipe_opts.trace_csv.empty()) {
                const std::string prefix =
                    tag.empty() ? pipe_opts.trace_csv : pipe_opts.trace_csv + "." + tag;
                write_text(prefix + ".reduced.csv", trace_to_csv(result.reduced_trace));
                write_text(prefix + ".refined.csv", trace_to_csv(result.refined_trace));
                if (result.baseline_trace)
                    write_text(prefix + ".baseline.csv",
                               trace_to_csv(*result.baseline_trace));
            }
            return to_json(result);
        };

        json payload;
        json fingerprints = json::object();
        if (!pipe_opts.input.empty()) {
            const Graph g = load_edge_list_file(pipe_opts.input);
            fingerprints[pipe_opts.input] = fingerprint_hex(g.fingerprint());
            payload = run_one(g, "");
        } else {
            payload["runs"] = json::array();
            for (const auto& [name, g] : load_dataset_dir(pipe_opts.dataset_dir)) {
                fingerprints[name] = fingerprint_hex(g.fingerprint());
                json one = run_one(g, name);
                one["graph"] = name;
                payload["runs"].push_back(std::move(one));
            }
        }
        payload["manifest"] = make_manifest("pipeline", flags, fingerprints, clock);
        emit(payload, pipe_opts.output);
    });

    auto* baseline = app.add_subcommand("baseline", "plain same-budget optimization");
    PipelineOpts base_opts;
    add_pipeline_flags(baseline, base_opts, false);
    add_threads_flag(baseline, base_opts.common);

    baseline->callback([&] {
        ManifestClock clock;
        const Graph g = load_edge_list_file(base_opts.input);
        OptimizerConfig config;
        config.restarts = base_opts.restarts > 0
                              ? base_opts.restarts
                              : default_restarts_for_layers(base_opts.p);
        config.max_evals_per_restart = base_opts.max_evals;
        config.seed = base_opts.seed;
        const auto noise = parse_noise(base_opts.noise);
        const auto trace = run_baseline(g, base_opts.p, noise, config,
                                        base_opts.common.resolved_threads());
        if (!base_opts.trace_csv.empty())
            write_text(base_opts.trace_csv, trace_to_csv(trace));

        json payload = to_json(trace);
        const Evaluator ideal = make_ideal_evaluator(g);
        ParamVector best = trace.best_params;
        if (noise) {
            double best_e = -1e300;
            for (const auto& [params, energy] : trace.per_restart_best()) {
                if (params.layers() == 0) continue;
                const double e = ideal(g, params);
                if (e > best_e) {
                    best_e = e;
                    best = params;
                }
            }
        }
        payload["approximation_ratio"] = approximation_ratio(
            ideal(g, best), max_cut_bruteforce(g).cut_value);
        payload["manifest"] = make_manifest(
            "baseline",
            json{{"input", base_opts.input},
                 {"p", base_opts.p},
                 {"restarts", config.restarts},
                 {"max_evals", base_opts.max_evals},
                 {"seed", base_opts.seed},
                 {"noise", base_opts.noise.empty() ? "none" : base_opts.noise}},
            json{{base_opts.input, fingerprint_hex(g.fingerprint())}}, clock);
        emit(payload, base_opts.output);
    });

    // ---- bench -----------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "dataset reduction statistics / scaling");
    struct {
        std::string dataset_dir, output, scaling;
        double threshold = 0.7;
        std::vector<int> ps{1};
        int points = 256;
        std::uint64_t seed = 0;
        bool timing = false;
        double avg_degree = 0.0; // scaling mode; 0 = 2 ln n
        std::string cooling = "adaptive";
        CommonOpts common;
    } bench_opts;
    auto* dir_opt = bench->add_option("--dataset-dir", bench_opts.dataset_dir,
                                      "directory of edge-list files");
    bench->add_option("--scaling", bench_opts.scaling,
                      "comma-separated node counts; times reduction only")
        ->excludes(dir_opt);
    bench->add_option("--threshold", bench_opts.threshold, "AND-ratio threshold");
    bench->add_option("--p", bench_opts.ps, "layer counts for the MSE part");
    bench->add_option("--points", bench_opts.points, "random sample points for MSE");
    bench->add_option("--seed", bench_opts.seed, "seed");
    bench->add_flag("--timing", bench_opts.timing,
                    "report per-graph reduction wall time");
    bench->add_option("--avg-degree", bench_opts.avg_degree,
                      "scaling mode: target average degree (default 2 ln n)");
    bench->add_option("--cooling", bench_opts.cooling, "constant|adaptive")
        ->check(CLI::IsMember({"constant", "adaptive"}));
    bench->add_option("-o,--output", bench_opts.output, "summary JSON file");
    add_threads_flag(bench, bench_opts.common);

    bench->callback([&] {
        ManifestClock clock;
        SAConfig sa;
        sa.seed = bench_opts.seed;
        sa.cooling = bench_opts.cooling == "constant" ? CoolingMode::Constant
                                                      : CoolingMode::Adaptive;
        json payload;
        json fingerprints = json::object();

        if (!bench_opts.scaling.empty()) {
            // reduction-only wall times on connected random graphs
            std::vector<std::uint32_t> sizes;
            std::stringstream ss(bench_opts.scaling);
            for (std::string tok; std::getline(ss, tok, ',');)
                sizes.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            payload["scaling"] = json::array();
            for (const auto n : sizes) {
                const double avg = bench_opts.avg_degree > 0
                                       ? bench_opts.avg_degree
                                       : 2.0 * std::log(static_cast<double>(n));
                const double prob = std::min(1.0, avg / (n - 1));
                Graph g;
                std::uint64_t seed = bench_opts.seed;
                do {
                    g = generate_erdos_renyi(n, prob, seed++);
                } while (!is_connected(g));
                const auto t0 = std::chrono::steady_clock::now();
                const auto result = find_reduced_graph(
                    g, bench_opts.threshold, sa,
                    bench_opts.common.resolved_threads());
                const double secs = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
                payload["scaling"].push_back(
                    json{{"nodes", n},
                         {"edges", g.edge_count()},
                         {"reduced_nodes", result.reduced_graph.node_count()},
                         {"seconds", secs}});
                std::cerr << "n=" << n << " reduced in " << secs << " s\n";
            }
        } else if (!bench_opts.dataset_dir.empty()) {
            std::vector<Graph> graphs;
            std::vector<std::string> names;
            for (auto& [name, g] : load_dataset_dir(bench_opts.dataset_dir)) {
                fingerprints[name] = fingerprint_hex(g.fingerprint());
                names.push_back(name);
                graphs.push_back(std::move(g));
            }
            const auto summary = bench_reduction_stats(
                graphs, names, bench_opts.threshold, bench_opts.ps,
                LandscapeSpec::random(bench_opts.points, bench_opts.seed), sa,
                bench_opts.common.resolved_threads());
            payload = to_json(summary);
            if (!bench_opts.timing) {
                for (auto& g : payload["graphs"]) g.erase("reduction_seconds");
            }
        } else {
            throw CLI::ValidationError(
                "bench", "one of --dataset-dir or --scaling is required");
        }

        payload["manifest"] = make_manifest(
            "bench",
            json{{"dataset_dir", bench_opts.dataset_dir},
                 {"scaling", bench_opts.scaling},
                 {"threshold", bench_opts.threshold},
                 {"p", bench_opts.ps},
                 {"points", bench_opts.points},
                 {"seed", bench_opts.seed},
                 {"cooling", bench_opts.cooling},
                 {"timing", bench_opts.timing}},
            fingerprints, clock);
        emit(payload, bench_opts.output);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
