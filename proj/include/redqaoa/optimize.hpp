#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redqaoa/qaoa.hpp"

namespace redqaoa {

struct OptimizerConfig {
    int restarts = 20;
    int max_evals_per_restart = 150;
    double initial_simplex_scale = 0.5; // radians
    double convergence_tol = 1e-6;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Restart counts used in the experiments for 1, 2 and 3 layers.
int default_restarts_for_layers(int p);

enum class EvalKind { Ideal, Noisy };

struct TraceRecord {
    ParamVector params;
    double energy = 0.0;
    EvalKind eval = EvalKind::Ideal;
    int restart = 0;
};

struct OptimizationTrace {
    std::string graph_tag = "original"; // "original" | "reduced"
    std::vector<TraceRecord> records;   // every evaluation, in order
    ParamVector best_params;
    double best_energy = 0.0;
    int best_restart = -1;
    std::int64_t total_evals = 0;

    /// Best (params, energy) per restart, by the trace's own evaluator.
    std::vector<std::pair<ParamVector, double>> per_restart_best() const;
};

/// Derivative-free maximization of the evaluator over the parameter
/// torus: `restarts` Nelder-Mead runs from seeded uniform starts in
/// [0,2pi]^p x [0,pi]^p. Restarts may run concurrently; the merged
/// result is independent of the thread count (best energy, ties to the
/// lowest restart index).
OptimizationTrace optimize_params(const Graph& g, int p, const Evaluator& eval,
                                  const OptimizerConfig& config,
                                  unsigned threads = 1,
                                  EvalKind kind = EvalKind::Ideal,
                                  const std::string& graph_tag = "original");

/// Single Nelder-Mead run seeded at `start`; used for refinement after
/// parameter transfer.
OptimizationTrace optimize_from(const Graph& g, const ParamVector& start,
                                const Evaluator& eval, int max_evals,
                                double convergence_tol,
                                double initial_simplex_scale,
                                EvalKind kind = EvalKind::Ideal,
                                const std::string& graph_tag = "original");

} // namespace redqaoa
