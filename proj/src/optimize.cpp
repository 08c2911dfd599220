#include "redqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "redqaoa/common.hpp"
#include "redqaoa/parallel.hpp"

namespace redqaoa {

void OptimizerConfig::validate() const {
    if (restarts < 1) throw Error("restarts must be >= 1");
    if (max_evals_per_restart < 1) throw Error("eval budget must be >= 1");
    if (!(initial_simplex_scale > 0)) throw Error("simplex scale must be positive");
    if (!(convergence_tol > 0)) throw Error("convergence tolerance must be positive");
}

int default_restarts_for_layers(int p) {
    switch (p) {
        case 1: return 20;
        case 2: return 50;
        default: return 150;
    }
}

std::vector<std::pair<ParamVector, double>>
OptimizationTrace::per_restart_best() const {
    std::vector<std::pair<ParamVector, double>> best;
    for (const auto& rec : records) {
        const auto idx = static_cast<std::size_t>(rec.restart);
        if (idx >= best.size())
            best.resize(idx + 1, {ParamVector{}, -std::numeric_limits<double>::infinity()});
        if (rec.energy > best[idx].second) best[idx] = {rec.params, rec.energy};
    }
    return best;
}

namespace {

struct NmOutcome {
    std::vector<TraceRecord> records;
    ParamVector best_params;
    double best_energy = -std::numeric_limits<double>::infinity();
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) maximizing f, tracking the best point ever evaluated.
NmOutcome nelder_mead_max(const std::vector<double>& x0,
                          const std::function<double(const ParamVector&)>& f,
                          int max_evals, double tol, double scale,
                          EvalKind kind, int restart_index) {
    const std::size_t dim = x0.size();
    NmOutcome out;
    std::int64_t evals = 0;

    auto evaluate = [&](const std::vector<double>& x) {
        const ParamVector params = ParamVector::from_flat(x);
        const double energy = f(params);
        ++evals;
        out.records.push_back({params, energy, kind, restart_index});
        if (energy > out.best_energy) {
            out.best_energy = energy;
            out.best_params = params;
        }
        return -energy; // minimize internally
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> fvals(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += scale;
    for (std::size_t i = 0; i <= dim && evals < max_evals; ++i)
        fvals[i] = evaluate(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    while (evals < max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fvals[a] < fvals[b];
        });
        const std::size_t best = order[0];
        const std::size_t worst = order[dim];
        const std::size_t second_worst = order[dim - 1];

        if (fvals[worst] - fvals[best] < tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
        }
        for (auto& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coeff) {
            std::vector<double> x(dim);
            for (std::size_t d = 0; d < dim; ++d)
                x[d] = centroid[d] + coeff * (centroid[d] - simplex[worst][d]);
            return x;
        };

        const auto reflected = blend(1.0);
        const double fr = evaluate(reflected);
        if (fr < fvals[best]) {
            if (evals >= max_evals) break;
            const auto expanded = blend(2.0);
            const double fe = evaluate(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                fvals[worst] = fe;
            } else {
                simplex[worst] = reflected;
                fvals[worst] = fr;
            }
        } else if (fr < fvals[second_worst]) {
            simplex[worst] = reflected;
            fvals[worst] = fr;
        } else {
            if (evals >= max_evals) break;
            const bool outside = fr < fvals[worst];
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double fc = evaluate(contracted);
            if (fc < std::min(fr, fvals[worst])) {
                simplex[worst] = contracted;
                fvals[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= dim && evals < max_evals; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < dim; ++d)
                        simplex[i][d] =
                            simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    fvals[i] = evaluate(simplex[i]);
                }
            }
        }
    }
    return out;
}

} // namespace

OptimizationTrace optimize_params(const Graph& g, int p, const Evaluator& eval,
                                  const OptimizerConfig& config,
                                  unsigned threads, EvalKind kind,
                                  const std::string& graph_tag) {
    config.validate();
    if (p < 1) throw Error("layer count must be >= 1");
    if (g.edge_count() == 0)
        throw Error("optimization needs a graph with edges");

    constexpr double pi = std::numbers::pi;
    std::vector<std::vector<double>> starts(
        static_cast<std::size_t>(config.restarts));
    for (int r = 0; r < config.restarts; ++r) {
        Xoshiro256ss rng = Xoshiro256ss::child(config.seed, static_cast<std::uint64_t>(r));
        std::vector<double> x0(static_cast<std::size_t>(2 * p));
        for (int l = 0; l < p; ++l) x0[l] = rng.uniform(0.0, 2.0 * pi);
        for (int l = 0; l < p; ++l) x0[p + l] = rng.uniform(0.0, pi);
        starts[static_cast<std::size_t>(r)] = std::move(x0);
    }

    std::vector<NmOutcome> outcomes(starts.size());
    parallel_for(starts.size(), threads, [&](std::size_t r) {
        outcomes[r] = nelder_mead_max(
            starts[r], [&](const ParamVector& params) { return eval(g, params); },
            config.max_evals_per_restart, config.convergence_tol,
            config.initial_simplex_scale, kind, static_cast<int>(r));
    });

    OptimizationTrace trace;
    trace.graph_tag = graph_tag;
    trace.best_energy = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        auto& o = outcomes[r];
        trace.records.insert(trace.records.end(),
                             std::make_move_iterator(o.records.begin()),
                             std::make_move_iterator(o.records.end()));
        if (o.best_energy > trace.best_energy) {
            trace.best_energy = o.best_energy;
            trace.best_params = o.best_params;
            trace.best_restart = static_cast<int>(r);
        }
    }
    trace.total_evals = static_cast<std::int64_t>(trace.records.size());
    return trace;
}

OptimizationTrace optimize_from(const Graph& g, const ParamVector& start,
                                const Evaluator& eval, int max_evals,
                                double convergence_tol,
                                double initial_simplex_scale, EvalKind kind,
                                const std::string& graph_tag) {
    start.validate();
    if (max_evals < 1) throw Error("eval budget must be >= 1");
    NmOutcome o = nelder_mead_max(
        start.flatten(),
        [&](const ParamVector& params) { return eval(g, params); }, max_evals,
        convergence_tol, initial_simplex_scale, kind, 0);

    OptimizationTrace trace;
    trace.graph_tag = graph_tag;
    trace.records = std::move(o.records);
    trace.best_params = o.best_params;
    trace.best_energy = o.best_energy;
    trace.best_restart = 0;
    trace.total_evals = static_cast<std::int64_t>(trace.records.size());
    return trace;
}

} // namespace redqaoa
