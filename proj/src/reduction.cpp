#include "redqaoa/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "redqaoa/common.hpp"
#include "redqaoa/parallel.hpp"

namespace redqaoa {

void SAConfig::validate() const {
    if (!(initial_temperature > 0))
        throw Error("initial temperature must be positive");
    if (!(stopping_temperature > 0) ||
        stopping_temperature >= initial_temperature)
        throw Error("stopping temperature must satisfy 0 < T_f < T_0");
    if (cooling == CoolingMode::Constant &&
        !(constant_alpha > 0.0 && constant_alpha < 1.0))
        throw Error("constant cooling factor must lie in (0, 1)");
    if (adaptive_window < 1) throw Error("adaptive window must be >= 1");
    if (max_steps < 0) throw Error("max_steps must be >= 0");
    if (neighbor_retry_budget < 1) throw Error("retry budget must be >= 1");
    if (restarts_per_k < 1) throw Error("restarts_per_k must be >= 1");
}

double reduction_objective(double candidate_and, double target_and) {
    return std::abs(candidate_and - target_and);
}

double adaptive_cooling_factor(double /*temperature*/, int recent_rejections,
                               int window) {
    constexpr double alpha_min = 0.85;
    constexpr double alpha_max = 0.999;
    const double rate =
        static_cast<double>(recent_rejections) / static_cast<double>(window);
    return alpha_min + (alpha_max - alpha_min) * rate;
}

namespace {

double subset_and(const Graph& g, const NodeSubset& s) {
    // average degree of the induced subgraph without materializing it
    std::vector<char> in_set(g.node_count(), 0);
    for (const auto m : s.members) in_set[m] = 1;
    std::size_t edges = 0;
    for (const auto m : s.members)
        for (const auto v : g.neighbors(m))
            if (v > m && in_set[v]) ++edges;
    return 2.0 * static_cast<double>(edges) / static_cast<double>(s.size());
}

struct MoveWindow {
    std::vector<char> rejected;
    std::size_t head = 0;
    int count = 0; // rejections currently in the window
    int filled = 0;

    explicit MoveWindow(int size) : rejected(static_cast<std::size_t>(size), 0) {}

    void record(bool was_rejected) {
        if (filled == static_cast<int>(rejected.size())) {
            count -= rejected[head];
        } else {
            ++filled;
        }
        rejected[head] = was_rejected ? 1 : 0;
        count += rejected[head];
        head = (head + 1) % rejected.size();
    }
};

} // namespace

namespace detail {

ReductionResult sa_reduce_with_draw(const Graph& g, std::uint32_t k,
                                    const SAConfig& config,
                                    const std::function<double()>* draw) {
    config.validate();
    if (g.node_count() < 1 || !is_connected(g))
        throw Error("reduction needs a connected graph");
    if (k < 2 || k > g.node_count())
        throw Error("subset size must satisfy 2 <= k <= node count");

    const double target_and = average_node_degree(g);
    Xoshiro256ss rng(config.seed);

    ReductionResult result;
    if (k == g.node_count()) {
        std::vector<std::uint32_t> all(g.node_count());
        for (std::uint32_t i = 0; i < g.node_count(); ++i) all[i] = i;
        result.subset = NodeSubset(std::move(all), g.node_count());
        result.reduced_graph = g;
        result.and_ratio = 1.0;
        result.reduced = true;
        return result;
    }

    NodeSubset current = random_connected_subset(g, k, rng);
    double f_current = reduction_objective(subset_and(g, current), target_and);
    NodeSubset best = current;
    double f_best = f_current;

    const std::int64_t max_steps =
        config.max_steps > 0 ? config.max_steps
                             : std::int64_t{20} * g.node_count();
    double temperature = config.initial_temperature;
    MoveWindow window(config.adaptive_window);
    std::int64_t steps = 0, accepted = 0;

    while (temperature > config.stopping_temperature && steps < max_steps) {
        ++steps;
        bool move_accepted = false;
        try {
            NodeSubset neighbor =
                neighbor_subset(current, g, rng, config.neighbor_retry_budget);
            const double f_neighbor =
                reduction_objective(subset_and(g, neighbor), target_and);
            if (f_neighbor < f_current) {
                move_accepted = true;
            } else {
                const double u = draw ? (*draw)() : rng.uniform();
                move_accepted =
                    u < std::exp(-(f_neighbor - f_current) / temperature);
            }
            if (move_accepted) {
                current = std::move(neighbor);
                f_current = f_neighbor;
                ++accepted;
                if (f_current < f_best) {
                    best = current;
                    f_best = f_current;
                }
            }
        } catch (const Error&) {
            // no connected neighbor within the retry budget; keep current
        }
        window.record(!move_accepted);

        if (config.cooling == CoolingMode::Adaptive) {
            temperature *= adaptive_cooling_factor(
                temperature, window.count,
                std::max(window.filled, 1));
        } else {
            temperature *= config.constant_alpha;
        }
    }

    result.subset = best;
    result.reduced_graph = induced_subgraph(g, best);
    result.objective_value = f_best;
    result.and_ratio = average_node_degree(result.reduced_graph) / target_and;
    result.final_objective = f_current;
    result.steps_taken = steps;
    result.accepted_moves = accepted;
    result.reduced = true;
    return result;
}

} // namespace detail

ReductionResult sa_reduce(const Graph& g, std::uint32_t k,
                          const SAConfig& config) {
    return detail::sa_reduce_with_draw(g, k, config, nullptr);
}

namespace {

// Best of restarts_per_k runs; deterministic merge by (objective, run index).
ReductionResult probe_size(const Graph& g, std::uint32_t k,
                           const SAConfig& config, unsigned threads) {
    std::vector<std::optional<ReductionResult>> runs(
        static_cast<std::size_t>(config.restarts_per_k));
    parallel_for(runs.size(), threads, [&](std::size_t r) {
        SAConfig run_config = config;
        run_config.seed = SplitMix64(config.seed ^ (std::uint64_t{k} << 32) ^ r).next();
        runs[r] = sa_reduce(g, k, run_config);
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r]->objective_value < runs[best]->objective_value) best = r;
    return *runs[best];
}

} // namespace

ReductionResult find_reduced_graph(const Graph& g, double and_ratio_threshold,
                                   const SAConfig& config, unsigned threads) {
    config.validate();
    if (g.node_count() < 3) throw Error("reduction driver needs >= 3 nodes");
    if (!is_connected(g)) throw Error("reduction needs a connected graph");
    if (!(and_ratio_threshold > 0.0 && and_ratio_threshold <= 1.0))
        throw Error("AND-ratio threshold must lie in (0, 1]");

    std::uint32_t lo = 3, hi = g.node_count() - 1;
    std::optional<ReductionResult> best_feasible;
    while (lo <= hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        ReductionResult r = probe_size(g, mid, config, threads);
        if (r.and_ratio >= and_ratio_threshold) {
            best_feasible = std::move(r);
            if (mid == 3) break;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    if (best_feasible) return *best_feasible;

    ReductionResult trivial;
    std::vector<std::uint32_t> all(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) all[i] = i;
    trivial.subset = NodeSubset(std::move(all), g.node_count());
    trivial.reduced_graph = g;
    trivial.and_ratio = 1.0;
    trivial.reduced = false;
    return trivial;
}

} // namespace redqaoa
