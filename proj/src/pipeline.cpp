#include "redqaoa/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "redqaoa/common.hpp"
#include "redqaoa/metrics.hpp"
#include "redqaoa/parallel.hpp"

namespace redqaoa {

void PipelineConfig::validate() const {
    if (p < 1) throw Error("layer count must be >= 1");
    if (!(and_ratio_threshold > 0.0 && and_ratio_threshold <= 1.0))
        throw Error("AND-ratio threshold must lie in (0, 1]");
    if (!(refine_budget_fraction > 0.0 && refine_budget_fraction < 1.0))
        throw Error("refine budget fraction must lie in (0, 1)");
    reduction.validate();
    optimizer.validate();
    if (noise) noise->validate();
}

ParamVector transfer_params(const OptimizationTrace& source) {
    if (source.best_restart < 0 || source.best_params.layers() == 0)
        throw Error("cannot transfer parameters from an empty trace");
    return source.best_params;
}

std::vector<double> ideal_recompute_trace(const Graph& g,
                                          const OptimizationTrace& trace) {
    const Evaluator ideal = make_ideal_evaluator(g);
    std::vector<double> energies;
    energies.reserve(trace.records.size());
    for (const auto& rec : trace.records) energies.push_back(ideal(g, rec.params));
    return energies;
}

namespace {

Evaluator evaluator_for(const Graph& g, const std::optional<NoiseModel>& noise,
                        std::uint64_t seed) {
    if (noise) return make_noisy_evaluator(*noise, seed);
    return make_ideal_evaluator(g);
}

} // namespace

PipelineResult run_red_qaoa(const Graph& g, const PipelineConfig& config) {
    config.validate();
    if (g.edge_count() == 0) throw Error("pipeline needs a graph with edges");
    if (!is_connected(g)) throw Error("pipeline needs a connected graph");

    PipelineResult result;
    result.budget = std::int64_t{config.optimizer.restarts} *
                    config.optimizer.max_evals_per_restart;

    // 1. distill
    result.reduction = find_reduced_graph(g, config.and_ratio_threshold,
                                          config.reduction, config.threads);
    const Graph& reduced = result.reduction.reduced_graph;

    // 2. search on the distilled graph with the non-refinement share
    OptimizerConfig reduced_config = config.optimizer;
    reduced_config.max_evals_per_restart = std::max(
        1, static_cast<int>(std::floor(config.optimizer.max_evals_per_restart *
                                       (1.0 - config.refine_budget_fraction))));
    const EvalKind kind = config.noise ? EvalKind::Noisy : EvalKind::Ideal;
    result.reduced_trace = optimize_params(
        reduced, config.p,
        evaluator_for(reduced, config.noise, config.optimizer.seed),
        reduced_config, config.threads, kind, "reduced");

    // 3. transfer: pick the restart whose best params recompute highest
    // under the ideal evaluator (ties to the lower restart index)
    {
        const Evaluator ideal_reduced = make_ideal_evaluator(reduced);
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [params, energy] : result.reduced_trace.per_restart_best()) {
            if (params.layers() == 0) continue;
            const double ideal_energy = ideal_reduced(reduced, params);
            if (ideal_energy > best) {
                best = ideal_energy;
                result.transferred_params = params;
            }
        }
    }

    // 4. refine on the original graph from the transferred point
    const int refine_evals = std::max(
        1, static_cast<int>(std::floor(static_cast<double>(result.budget) *
                                       config.refine_budget_fraction)));
    result.refined_trace = optimize_from(
        g, result.transferred_params,
        evaluator_for(g, config.noise, config.optimizer.seed + 1), refine_evals,
        config.optimizer.convergence_tol, config.optimizer.initial_simplex_scale,
        kind, "original");
    result.final_params = result.refined_trace.best_params;
    if (config.noise) {
        // noisy search: keep whichever of (refined best, transferred)
        // recomputes higher under the ideal evaluator
        const Evaluator ideal = make_ideal_evaluator(g);
        if (ideal(g, result.transferred_params) >
            ideal(g, result.final_params))
            result.final_params = result.transferred_params;
    }

    // 5. ideal ratio at the final parameters
    const Evaluator ideal = make_ideal_evaluator(g);
    result.final_energy_ideal = ideal(g, result.final_params);
    result.max_cut = max_cut_bruteforce(g).cut_value;
    result.approximation_ratio =
        approximation_ratio(result.final_energy_ideal, result.max_cut);
    result.pipeline_evals = result.reduced_trace.total_evals +
                            result.refined_trace.total_evals;

    if (config.run_baseline_arm) {
        result.baseline_trace = run_baseline(g, config.p, config.noise,
                                             config.optimizer, config.threads);
        ParamVector baseline_params = result.baseline_trace->best_params;
        if (config.noise) {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& [params, energy] :
                 result.baseline_trace->per_restart_best()) {
                if (params.layers() == 0) continue;
                const double e = ideal(g, params);
                if (e > best) {
                    best = e;
                    baseline_params = params;
                }
            }
        }
        result.baseline_ratio =
            approximation_ratio(ideal(g, baseline_params), result.max_cut);
    }
    return result;
}

OptimizationTrace run_baseline(const Graph& g, int p,
                               const std::optional<NoiseModel>& noise,
                               const OptimizerConfig& config, unsigned threads) {
    const EvalKind kind = noise ? EvalKind::Noisy : EvalKind::Ideal;
    return optimize_params(g, p, evaluator_for(g, noise, config.seed), config,
                           threads, kind, "original");
}

SummaryStats summarize(std::vector<double> values) {
    SummaryStats s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = static_cast<std::size_t>(std::ceil(pos));
        return values[lo] + (values[hi] - values[lo]) * (pos - std::floor(pos));
    };
    for (const double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    s.median = quantile(0.5);
    s.q1 = quantile(0.25);
    s.q3 = quantile(0.75);
    return s;
}

BenchSummary bench_reduction_stats(const std::vector<Graph>& dataset,
                                   const std::vector<std::string>& names,
                                   double threshold, std::vector<int> ps,
                                   const LandscapeSpec& sample_spec,
                                   const SAConfig& sa_config, unsigned threads) {
    BenchSummary summary;
    summary.graphs.resize(dataset.size());

    parallel_for(dataset.size(), threads, [&](std::size_t i) {
        const Graph& g = dataset[i];
        BenchGraphRecord& rec = summary.graphs[i];
        rec.name = i < names.size() ? names[i] : "graph-" + std::to_string(i);
        rec.nodes = g.node_count();
        rec.edges = g.edge_count();

        if (g.node_count() < 3 || g.edge_count() == 0 || !is_connected(g)) {
            rec.skipped = true;
            rec.skip_reason = "graph must be connected with >= 3 nodes";
            return;
        }

        SAConfig sa = sa_config;
        sa.seed = SplitMix64(sa_config.seed ^ (i * 0x9e3779b97f4a7c15ULL)).next();
        const auto t0 = std::chrono::steady_clock::now();
        ReductionResult red = find_reduced_graph(g, threshold, sa, 1);
        rec.reduction_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        rec.reduced = red.reduced;
        rec.reduced_nodes = red.reduced_graph.node_count();
        rec.reduced_edges = red.reduced_graph.edge_count();
        rec.node_reduction =
            1.0 - static_cast<double>(rec.reduced_nodes) / rec.nodes;
        rec.edge_reduction =
            rec.edges == 0 ? 0.0
                           : 1.0 - static_cast<double>(rec.reduced_edges) /
                                       static_cast<double>(rec.edges);
        rec.and_ratio = red.and_ratio;

        if (ps.empty()) return;
        if (static_cast<int>(g.node_count()) > statevector_guard()) {
            rec.skip_reason = "landscape skipped: above statevector guard";
            return;
        }
        for (const int p : ps) {
            const auto original = sample_landscape(
                g, p, sample_spec, make_ideal_evaluator(g), 1);
            const auto reduced_land = sample_landscape(
                red.reduced_graph, p, sample_spec,
                make_ideal_evaluator(red.reduced_graph), 1);
            rec.mse_per_p.emplace_back(
                p, mse(normalize_landscape(original),
                       normalize_landscape(reduced_land)));
        }
    });

    std::vector<double> node_reds, edge_reds;
    std::map<int, std::vector<double>> mse_values;
    for (const auto& rec : summary.graphs) {
        if (rec.skipped) {
            ++summary.skipped;
            continue;
        }
        node_reds.push_back(rec.node_reduction);
        edge_reds.push_back(rec.edge_reduction);
        for (const auto& [p, m] : rec.mse_per_p) mse_values[p].push_back(m);
    }
    summary.node_reduction = summarize(std::move(node_reds));
    summary.edge_reduction = summarize(std::move(edge_reds));
    for (auto& [p, values] : mse_values)
        summary.mse_per_p.emplace_back(p, summarize(std::move(values)));
    return summary;
}

} // namespace redqaoa
