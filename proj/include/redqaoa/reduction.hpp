#pragma once

#include <cstdint>
#include <functional>

#include "redqaoa/graph.hpp"

namespace redqaoa {

enum class CoolingMode { Constant, Adaptive };

/// Annealing schedule for the subset search. max_steps == 0 means
/// 20 * node_count, resolved at run time.
struct SAConfig {
    double initial_temperature = 1.0;
    double stopping_temperature = 1e-3;
    CoolingMode cooling = CoolingMode::Adaptive;
    double constant_alpha = 0.95;
    int adaptive_window = 50;
    std::int64_t max_steps = 0;
    std::uint64_t seed = 0;
    int neighbor_retry_budget = 32;
    int restarts_per_k = 3; // SA runs per probed size in the driver

    void validate() const;
};

struct ReductionResult {
    NodeSubset subset;
    Graph reduced_graph;
    double objective_value = 0.0; // best |AND(reduced) - AND(original)| seen
    double and_ratio = 1.0;       // AND(reduced) / AND(original)
    double final_objective = 0.0; // objective of the walk's final subset
    std::int64_t steps_taken = 0;
    std::int64_t accepted_moves = 0;
    bool reduced = false; // false: trivial full-graph fallback
};

/// |candidate_and - target_and|
double reduction_objective(double candidate_and, double target_and);

/// Cooling factor in [0.85, 0.999], linear in the rejection rate of the
/// recent window: a mostly-rejecting (near-frozen) chain cools slowly,
/// a mostly-accepting chain cools fast. The current temperature is part
/// of the alpha(T) interface but does not enter the linear rule.
double adaptive_cooling_factor(double temperature, int recent_rejections,
                               int window);

/// Simulated annealing over connected k-subsets minimizing the AND
/// mismatch with the input graph. One proposed swap per temperature
/// step; worsening or equal moves accepted with probability
/// exp(-(f_neighbor - f_current) / T). Returns the best subset seen.
ReductionResult sa_reduce(const Graph& g, std::uint32_t k,
                          const SAConfig& config);

/// Binary search over subset sizes k in [3, n-1]: each probe takes the
/// best of restarts_per_k annealing runs; a size is feasible when its
/// AND ratio reaches the threshold. Returns the result for the smallest
/// feasible size, or the full graph with reduced=false when none is.
ReductionResult find_reduced_graph(const Graph& g, double and_ratio_threshold,
                                   const SAConfig& config,
                                   unsigned threads = 1);

namespace detail {
/// Acceptance draws come from `draw` when provided (test hook);
/// otherwise from the seeded generator.
ReductionResult sa_reduce_with_draw(const Graph& g, std::uint32_t k,
                                    const SAConfig& config,
                                    const std::function<double()>* draw);
} // namespace detail

} // namespace redqaoa
