#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redqaoa/landscape.hpp"
#include "redqaoa/noise.hpp"
#include "redqaoa/optimize.hpp"
#include "redqaoa/reduction.hpp"

namespace redqaoa {

struct PipelineConfig {
    int p = 1;
    double and_ratio_threshold = 0.7;
    double refine_budget_fraction = 0.2;
    SAConfig reduction;
    OptimizerConfig optimizer;
    std::optional<NoiseModel> noise; // nullopt: ideal evaluations
    bool run_baseline_arm = false;
    unsigned threads = 1;

    void validate() const;
};

struct PipelineResult {
    ReductionResult reduction;
    OptimizationTrace reduced_trace; // search on the distilled graph
    OptimizationTrace refined_trace; // continuation on the original graph
    ParamVector transferred_params;
    ParamVector final_params;
    double final_energy_ideal = 0.0; // ideal expectation at final_params
    double approximation_ratio = 0.0;
    int max_cut = 0;
    std::int64_t pipeline_evals = 0;
    std::int64_t budget = 0; // restarts * max_evals_per_restart
    std::optional<OptimizationTrace> baseline_trace;
    std::optional<double> baseline_ratio;
};

/// Identity copy of the source trace's best parameters; the layer count
/// carries over unchanged.
ParamVector transfer_params(const OptimizationTrace& source);

/// Re-evaluates every trace record's parameters with the ideal
/// evaluator on g; used to draw convergence curves for noisy runs.
std::vector<double> ideal_recompute_trace(const Graph& g,
                                          const OptimizationTrace& trace);

/// The full flow: reduce, optimize on the distilled graph, transfer,
/// refine on the original, report the ideal approximation ratio at the
/// final parameters. Noisy evaluations (when a model is given) are used
/// for the search only; ratios always come from the ideal evaluator.
/// The reduced search and the refinement stay within the budget
/// restarts * max_evals_per_restart so the baseline comparison is fair.
PipelineResult run_red_qaoa(const Graph& g, const PipelineConfig& config);

/// Plain optimization on g with the same total budget as the pipeline.
OptimizationTrace run_baseline(const Graph& g, int p,
                               const std::optional<NoiseModel>& noise,
                               const OptimizerConfig& config,
                               unsigned threads = 1);

struct BenchGraphRecord {
    std::string name;
    std::uint32_t nodes = 0, reduced_nodes = 0;
    std::size_t edges = 0, reduced_edges = 0;
    double node_reduction = 0.0; // 1 - k/n
    double edge_reduction = 0.0;
    double and_ratio = 0.0;
    bool reduced = false;
    std::vector<std::pair<int, double>> mse_per_p; // (p, normalized MSE)
    bool skipped = false;
    std::string skip_reason;
    double reduction_seconds = 0.0;
};

struct SummaryStats {
    double mean = 0.0, median = 0.0, q1 = 0.0, q3 = 0.0;
};

SummaryStats summarize(std::vector<double> values);

struct BenchSummary {
    std::vector<BenchGraphRecord> graphs;
    SummaryStats node_reduction, edge_reduction;
    std::vector<std::pair<int, SummaryStats>> mse_per_p;
    std::size_t skipped = 0;
};

/// Reduction ratios and original-vs-reduced landscape MSE over a
/// dataset. Graphs failing preconditions are skipped and logged in the
/// record. MSE is evaluated for each requested layer count at the given
/// sample spec; empty `ps` skips the landscape part entirely.
BenchSummary bench_reduction_stats(const std::vector<Graph>& dataset,
                                   const std::vector<std::string>& names,
                                   double threshold, std::vector<int> ps,
                                   const LandscapeSpec& sample_spec,
                                   const SAConfig& sa_config,
                                   unsigned threads = 1);

} // namespace redqaoa
