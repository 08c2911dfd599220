// Acceptance suite: runs every top-level claim end to end and prints
// one pass/fail line per criterion. Exit code is the number of failed
// criteria. `acceptance --only N` restricts to one criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "redqaoa/metrics.hpp"
#include "redqaoa/parallel.hpp"
#include "redqaoa/pipeline.hpp"

#include "oracle.hpp"

using namespace redqaoa;
using clock_type = std::chrono::steady_clock;
constexpr double pi = std::numbers::pi;

namespace {

unsigned g_threads = 1;
int g_failures = 0;
int g_only = 0;

struct Criterion {
    int index;
    std::string label;
    bool passed = true;
    std::ostringstream detail;

    Criterion(int index_, std::string label_)
        : index(index_), label(std::move(label_)) {}

    template <typename T>
    void expect(bool ok, const std::string& what, const T& value) {
        if (!detail.str().empty()) detail << ", ";
        detail << what << "=" << value;
        if (!ok) {
            passed = false;
            detail << " [FAILED]";
        }
    }
};

bool should_run(int index) { return g_only == 0 || g_only == index; }

template <typename Fn>
void run_criterion(int index, const std::string& label, Fn&& body) {
    if (!should_run(index)) return;
    Criterion c(index, label);
    const auto t0 = clock_type::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail << " exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(clock_type::now() - t0).count();
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << index << ". " << label
              << ": " << c.detail.str() << "  (" << std::fixed
              << std::setprecision(1) << secs << " s)\n"
              << std::defaultfloat << std::setprecision(6);
    std::cout.flush();
    if (!c.passed) ++g_failures;
}

Graph connected_er(std::uint32_t n, double p, std::uint64_t& seed) {
    for (;;) {
        const Graph g = generate_erdos_renyi(n, p, seed++);
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
}

ParamVector random_point(int p, Xoshiro256ss& rng) {
    std::vector<double> gammas(p), betas(p);
    for (int l = 0; l < p; ++l) gammas[l] = rng.uniform(0.0, 2.0 * pi);
    for (int l = 0; l < p; ++l) betas[l] = rng.uniform(0.0, pi);
    return {gammas, betas};
}

double normalized_mse(const EnergyLandscape& a, const EnergyLandscape& b) {
    return mse(normalize_landscape(a), normalize_landscape(b));
}

// ---------------------------------------------------------------------------

void criterion_cycle_equivalence(Criterion& c) {
    const Graph c7 = generate_cycle(7);
    const Graph c10 = generate_cycle(10);
    const auto spec = LandscapeSpec::grid(30);
    const auto l7 = sample_landscape(c7, 1, spec, make_ideal_evaluator(c7), g_threads);
    const auto l10 = sample_landscape(c10, 1, spec, make_ideal_evaluator(c10), g_threads);
    c.expect(l7.size() == 900, "points", l7.size());
    const double m = normalized_mse(l7, l10);
    c.expect(m <= 1e-3, "mse", m);
}

void criterion_zero_angle(Criterion& c) {
    std::uint64_t seed = 1000;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(4 + i % 9); // 4..12
        const Graph g = generate_erdos_renyi(n, 0.5, seed++);
        const int p = 1 + i % 3;
        const ParamVector zero(std::vector<double>(p, 0.0),
                               std::vector<double>(p, 0.0));
        const double diff =
            std::abs(qaoa_expectation(g, zero) - g.edge_count() / 2.0);
        worst = std::max(worst, diff);
    }
    c.expect(worst < 1e-12, "max |E(0) - |E|/2|", worst);
}

void criterion_oracle_equivalence(Criterion& c) {
    std::uint64_t seed = 2000;
    Xoshiro256ss rng(77);
    double worst = 0.0;
    for (int gi = 0; gi < 10; ++gi) {
        const auto n = static_cast<std::uint32_t>(3 + gi % 4); // 3..6
        const Graph g = connected_er(n, 0.6, seed);
        for (int rep = 0; rep < 50; ++rep) {
            const auto params = random_point(1 + rep % 3, rng);
            const double diff = std::abs(qaoa_expectation(g, params) -
                                         oracle::expectation(g, params));
            worst = std::max(worst, diff);
        }
    }
    c.expect(worst < 1e-10, "max |statevector - dense oracle|", worst);
}

void criterion_local_energy_sum(Criterion& c) {
    std::uint64_t seed = 3000;
    Xoshiro256ss rng(5);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Graph g = connected_er(static_cast<std::uint32_t>(5 + i % 6), 0.5, seed);
        const auto params = random_point(1 + i % 3, rng);
        const auto locals = local_edge_expectations(g, params);
        double sum = 0.0;
        for (const double e : locals) sum += e;
        worst = std::max(worst, std::abs(sum - qaoa_expectation(g, params)));
    }
    c.expect(worst < 1e-9, "max |sum(local) - total|", worst);
}

void criterion_symmetries(Criterion& c) {
    std::uint64_t seed = 4000;
    Xoshiro256ss rng(13);
    double worst_period_g = 0, worst_period_b = 0, worst_conj = 0;
    for (int i = 0; i < 20; ++i) {
        const Graph g = connected_er(static_cast<std::uint32_t>(5 + i % 6), 0.5, seed);
        const int p = 1 + i % 2;
        const auto params = random_point(p, rng);
        const double base = qaoa_expectation(g, params);

        ParamVector shifted = params;
        shifted.gammas[0] += 2 * pi;
        worst_period_g = std::max(
            worst_period_g, std::abs(qaoa_expectation(g, shifted) - base));

        shifted = params;
        shifted.betas[p - 1] += pi;
        worst_period_b = std::max(
            worst_period_b, std::abs(qaoa_expectation(g, shifted) - base));

        ParamVector negated = params;
        for (auto& v : negated.gammas) v = -v;
        for (auto& v : negated.betas) v = -v;
        worst_conj =
            std::max(worst_conj, std::abs(qaoa_expectation(g, negated) - base));
    }
    c.expect(worst_period_g < 1e-9, "gamma+2pi", worst_period_g);
    c.expect(worst_period_b < 1e-9, "beta+pi", worst_period_b);
    c.expect(worst_conj < 1e-9, "conjugation", worst_conj);
}

void criterion_sa_optimality(Criterion& c) {
    std::uint64_t seed = 5000;
    int optimal_hits = 0, decile_hits = 0;
    const int runs = 20;
    for (int i = 0; i < runs; ++i) {
        const Graph g = connected_er(12, 0.4, seed);

        std::vector<double> objectives;
        const double target = average_node_degree(g);
        for (const auto& s : enumerate_connected_subsets(g, 8))
            objectives.push_back(reduction_objective(
                average_node_degree(induced_subgraph(g, s)), target));
        std::sort(objectives.begin(), objectives.end());
        const double exhaustive_min = objectives.front();
        const double decile =
            objectives[(objectives.size() - 1) / 10];

        SAConfig config;
        config.seed = seed * 31 + static_cast<std::uint64_t>(i);
        const auto result = sa_reduce(g, 8, config);
        if (std::abs(result.objective_value - exhaustive_min) < 1e-12)
            ++optimal_hits;
        if (result.objective_value <= decile + 1e-12) ++decile_hits;
    }
    c.expect(optimal_hits >= 18, "optimal hits (of 20)", optimal_hits);
    c.expect(decile_hits == runs, "best-decile hits (of 20)", decile_hits);
}

void criterion_reduction_statistics(Criterion& c) {
    std::vector<Graph> dataset;
    std::vector<std::string> names;
    std::uint64_t seed = 6000;
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<std::uint32_t>(7 + i % 10); // 7..16
        dataset.push_back(connected_er(n, 0.5, seed));
        names.push_back("er-" + std::to_string(i));
    }
    SAConfig sa;
    sa.seed = 99;
    const auto summary = bench_reduction_stats(dataset, names, 0.7, {1},
                                               LandscapeSpec::random(256, 7),
                                               sa, g_threads);
    c.expect(summary.skipped == 0, "skipped", summary.skipped);
    const double node_red = summary.node_reduction.mean;
    const double edge_red = summary.edge_reduction.mean;
    const double mean_mse = summary.mse_per_p.at(0).second.mean;
    c.expect(node_red >= 0.15 && node_red <= 0.45, "mean node reduction", node_red);
    c.expect(edge_red >= 0.25 && edge_red <= 0.55, "mean edge reduction", edge_red);
    c.expect(mean_mse <= 0.02, "mean normalized MSE", mean_mse);
}

void criterion_mse_and_correlation(Criterion& c) {
    std::uint64_t seed = 7000;
    const auto spec = LandscapeSpec::grid(30);
    std::vector<double> and_gap, mses;
    for (int gi = 0; gi < 3; ++gi) {
        const Graph g = connected_er(8, 0.5, seed);
        const auto original =
            sample_landscape(g, 1, spec, make_ideal_evaluator(g), g_threads);
        const double and_g = average_node_degree(g);
        for (std::uint32_t k = 3; k <= 8; ++k) {
            for (const auto& subset : enumerate_connected_subsets(g, k)) {
                const Graph sub = induced_subgraph(g, subset);
                if (sub.edge_count() == 0) continue;
                const auto land = sample_landscape(
                    sub, 1, spec, make_ideal_evaluator(sub), g_threads);
                and_gap.push_back(1.0 - average_node_degree(sub) / and_g);
                mses.push_back(normalized_mse(original, land));
            }
        }
    }
    const double rho = spearman_rho(and_gap, mses);
    c.expect(and_gap.size() > 100, "subgraphs", and_gap.size());
    c.expect(rho >= 0.4, "spearman rho", rho);
}

void criterion_noisy_recovery(Criterion& c) {
    std::uint64_t seed = 8000;
    const NoiseModel noise; // defaults: 0.01/0.001/0.02, 8192 shots
    const auto spec = LandscapeSpec::random(128, 11);
    int wins = 0;
    for (const std::uint32_t n : {7u, 8u, 9u, 10u}) {
        const Graph g = connected_er(n, 0.5, seed);
        SAConfig sa;
        sa.seed = seed;
        const auto red = find_reduced_graph(g, 0.7, sa, g_threads);

        const auto ideal_orig =
            sample_landscape(g, 1, spec, make_ideal_evaluator(g), g_threads);
        const auto noisy_orig = sample_landscape(
            g, 1, spec, make_noisy_evaluator(noise, seed), g_threads);
        const auto noisy_reduced = sample_landscape(
            red.reduced_graph, 1, spec, make_noisy_evaluator(noise, seed + 1),
            g_threads);

        const double mse_baseline = normalized_mse(noisy_orig, ideal_orig);
        const double mse_red = normalized_mse(noisy_reduced, ideal_orig);
        if (mse_red < mse_baseline) ++wins;
        c.detail << "n=" << n << " reduced " << mse_red << " vs baseline "
                 << mse_baseline << "; ";
    }
    c.expect(wins >= 3, "sizes where the reduced landscape is closer", wins);
}

void criterion_end_to_end_sign(Criterion& c) {
    std::uint64_t seed = 9000;
    std::vector<Graph> graphs;
    for (int i = 0; i < 20; ++i) graphs.push_back(connected_er(10, 0.5, seed));

    std::vector<double> improvements(graphs.size());
    parallel_for(graphs.size(), g_threads, [&](std::size_t i) {
        PipelineConfig config;
        config.p = 1;
        config.noise = NoiseModel{}; // defaults with 8192 shots
        config.optimizer.restarts = 5;
        config.optimizer.max_evals_per_restart = 40;
        config.optimizer.seed = 1234 + i;
        config.reduction.seed = 4321 + i;
        config.run_baseline_arm = true;
        config.threads = 1;
        const auto result = run_red_qaoa(graphs[i], config);
        improvements[i] = result.approximation_ratio - *result.baseline_ratio;
    });
    std::sort(improvements.begin(), improvements.end());
    const double median =
        0.5 * (improvements[9] + improvements[10]);
    c.expect(median > 0.0, "median(pipeline - noisy baseline)", median);
}

void criterion_ideal_parity(Criterion& c) {
    std::uint64_t seed = 10000;
    std::vector<Graph> graphs;
    for (int i = 0; i < 20; ++i) graphs.push_back(connected_er(14, 0.4, seed));

    std::vector<double> pipeline_ratios(graphs.size()),
        baseline_ratios(graphs.size());
    parallel_for(graphs.size(), g_threads, [&](std::size_t i) {
        PipelineConfig config;
        config.p = 1;
        config.optimizer.restarts = 20;
        config.optimizer.max_evals_per_restart = 150;
        config.optimizer.seed = 555 + i;
        config.reduction.seed = 777 + i;
        config.run_baseline_arm = true;
        config.threads = 1;
        const auto result = run_red_qaoa(graphs[i], config);
        pipeline_ratios[i] = result.approximation_ratio;
        baseline_ratios[i] = *result.baseline_ratio;
    });
    double mean_pipeline = 0, mean_baseline = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        mean_pipeline += pipeline_ratios[i];
        mean_baseline += baseline_ratios[i];
    }
    mean_pipeline /= static_cast<double>(graphs.size());
    mean_baseline /= static_cast<double>(graphs.size());
    c.expect(mean_pipeline >= 0.97 * mean_baseline, "mean pipeline ratio",
             mean_pipeline);
    c.detail << " vs baseline " << mean_baseline;
}

void criterion_driver_scaling(Criterion& c) {
    const std::vector<std::uint32_t> sizes{100, 200, 400, 800};
    std::vector<double> times, xs;
    std::uint64_t seed = 11000;
    double t800 = 0.0;
    for (const auto n : sizes) {
        const double prob =
            std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / (n - 1));
        const Graph g = connected_er(n, prob, seed);
        SAConfig sa;
        sa.seed = 3;
        sa.cooling = CoolingMode::Constant;
        const auto t0 = clock_type::now();
        const auto result = find_reduced_graph(g, 0.7, sa, g_threads);
        const double secs =
            std::chrono::duration<double>(clock_type::now() - t0).count();
        times.push_back(secs);
        xs.push_back(static_cast<double>(n) * std::log(static_cast<double>(n)));
        if (n == 800) t800 = secs;
        c.detail << "n=" << n << " " << secs << "s (k="
                 << result.reduced_graph.node_count() << "); ";
    }
    // least-squares c for t = c * n log n, then the per-point ratio
    double num = 0, den = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        num += times[i] * xs[i];
        den += xs[i] * xs[i];
    }
    const double scale = num / den;
    double worst_ratio = 1.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double fit = scale * xs[i];
        worst_ratio = std::max(worst_ratio,
                               std::max(times[i] / fit, fit / times[i]));
    }
    c.expect(worst_ratio < 3.0, "max deviation from n log n fit", worst_ratio);
    c.expect(t800 < 30.0, "800-node reduction seconds", t800);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            g_only = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            g_threads = static_cast<unsigned>(std::atoi(argv[++i]));
    }
    if (g_threads == 0) g_threads = 1;
    if (g_threads == 1) g_threads = default_thread_count();

    run_criterion(1, "cycle-landscape equivalence (C7 vs C10, grid 30)",
                  criterion_cycle_equivalence);
    run_criterion(2, "zero-angle identity on 100 random graphs",
                  criterion_zero_angle);
    run_criterion(3, "statevector vs dense-matrix oracle", criterion_oracle_equivalence);
    run_criterion(4, "local-energy sum equals the total", criterion_local_energy_sum);
    run_criterion(5, "periodicity and conjugation symmetry", criterion_symmetries);
    run_criterion(6, "annealing matches exhaustive subset search",
                  criterion_sa_optimality);
    run_criterion(7, "reduction statistics over 50 random graphs",
                  criterion_reduction_statistics);
    run_criterion(8, "MSE-AND correlation over all connected subgraphs",
                  criterion_mse_and_correlation);
    run_criterion(9, "noisy-landscape recovery beats the noisy baseline",
                  criterion_noisy_recovery);
    run_criterion(10, "noisy end-to-end median improvement is positive",
                  criterion_end_to_end_sign);
    run_criterion(11, "ideal end-to-end parity with the baseline",
                  criterion_ideal_parity);
    run_criterion(12, "reduction driver scales as n log n", criterion_driver_scaling);

    if (g_failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << g_failures << " criteria failed\n";
    return g_failures;
}
