#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "redqaoa/common.hpp"
#include "redqaoa/metrics.hpp"
#include "redqaoa/noise.hpp"

using namespace redqaoa;

namespace {

ParamVector random_params(int p, Xoshiro256ss& rng) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> gammas(p), betas(p);
    for (int l = 0; l < p; ++l) gammas[l] = rng.uniform(0.0, 2.0 * pi);
    for (int l = 0; l < p; ++l) betas[l] = rng.uniform(0.0, pi);
    return {gammas, betas};
}

// nested family with constant density: every prefix of a path is a path
Graph path_graph(std::uint32_t n) {
    std::vector<Graph::Edge> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("noise model validation and JSON") {
    NoiseModel bad;
    bad.two_qubit_depol = 1.5;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = NoiseModel{};
    bad.readout_flip = 0.6;
    CHECK_THROWS_AS(bad.validate(), Error);
    NoiseModel{}.validate(); // defaults are valid
}

TEST_CASE("zero noise reduces to the ideal expectation") {
    Xoshiro256ss rng(3);
    const NoiseModel none = NoiseModel::none();
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Graph g = generate_erdos_renyi(6, 0.5, seed + 10);
        const auto params = random_params(1 + seed % 2, rng);
        const double ideal = qaoa_expectation(g, params);
        CHECK(std::abs(noisy_expectation_dm(g, params, none, 1) - ideal) < 1e-9);
        CHECK(std::abs(noisy_expectation_global(g, params, none, 1) - ideal) < 1e-9);
    }
}

TEST_CASE("full two-qubit depolarizing mixes a single edge to one half") {
    const Graph edge(2, {{0, 1}});
    NoiseModel noise = NoiseModel::none();
    noise.two_qubit_depol = 1.0;
    Xoshiro256ss rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        const auto params = random_params(1, rng);
        CHECK(noisy_expectation_dm(edge, params, noise, 1) ==
              doctest::Approx(0.5).epsilon(1e-9));
        CHECK(noisy_expectation_global(edge, params, noise, 1) ==
              doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("density matrix stays physical through the channels") {
    const Graph g = generate_erdos_renyi(5, 0.6, 8);
    NoiseModel noise; // defaults
    noise.shots.reset();
    Xoshiro256ss rng(11);
    const auto params = random_params(2, rng);
    const DensityMatrix rho = noisy_density_matrix(g, params, noise);

    CHECK(std::abs(rho.trace_real() - 1.0) < 1e-9);

    const std::size_t d = rho.dim();
    for (std::size_t z = 0; z < d; ++z)
        for (std::size_t w = 0; w < z; ++w) {
            const auto upper = rho.at(w, z);
            const auto lower = rho.at(z, w);
            CHECK(std::abs(upper - std::conj(lower)) < 1e-9);
        }

    // PSD probe: v' rho v >= 0 for random vectors
    for (int probe = 0; probe < 200; ++probe) {
        std::vector<std::complex<double>> v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::complex<double> quad = 0.0;
        for (std::size_t z = 0; z < d; ++z)
            for (std::size_t w = 0; w < d; ++w)
                quad += std::conj(v[z]) * rho.at(z, w) * v[w];
        CHECK(quad.real() > -1e-9);
        CHECK(std::abs(quad.imag()) < 1e-9);
    }
}

TEST_CASE("noise contracts toward half the edges") {
    const Graph g = generate_cycle(5);
    NoiseModel noise;
    noise.shots.reset();
    const double half = g.edge_count() / 2.0;
    Xoshiro256ss rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const auto params = random_params(1, rng);
        const double ideal = qaoa_expectation(g, params);
        const double noisy = noisy_expectation_dm(g, params, noise, 1);
        const double lo = std::min(ideal, half) - 1e-9;
        const double hi = std::max(ideal, half) + 1e-9;
        CHECK(noisy >= lo);
        CHECK(noisy <= hi);
    }

    // strictly between the ideal optimum and |E|/2 at near-optimal params
    double best_energy = 0;
    ParamVector best({0.0}, {0.0});
    for (int gi = 0; gi < 40; ++gi)
        for (int bi = 0; bi < 40; ++bi) {
            const ParamVector p({2 * std::numbers::pi * gi / 39},
                                {std::numbers::pi * bi / 39});
            const double e = qaoa_expectation(g, p);
            if (e > best_energy) {
                best_energy = e;
                best = p;
            }
        }
    const double noisy_at_opt = noisy_expectation_dm(g, best, noise, 1);
    CHECK(noisy_at_opt < best_energy);
    CHECK(noisy_at_opt > half);
}

TEST_CASE("shot noise is deterministic per seed and unbiased-ish") {
    const Graph g = generate_cycle(6);
    NoiseModel noise = NoiseModel::none();
    noise.shots = 8192;
    const ParamVector params({0.4}, {0.3});
    const double a = noisy_expectation_dm(g, params, noise, 42);
    const double b = noisy_expectation_dm(g, params, noise, 42);
    CHECK(a == b);
    const double exact = qaoa_expectation(g, params);
    CHECK(std::abs(a - exact) < 3.0 * (6.0 / 2.0) / std::sqrt(8192.0));

    const double c = noisy_expectation_global(g, params, noise, 42);
    CHECK(c == noisy_expectation_global(g, params, noise, 42));
    CHECK(c != noisy_expectation_global(g, params, noise, 43));
}

TEST_CASE("global surrogate tracks the density matrix ordering") {
    const Graph g = generate_erdos_renyi(7, 0.5, 31);
    REQUIRE(g.edge_count() > 0);
    NoiseModel noise;
    noise.shots.reset();
    Xoshiro256ss rng(17);
    std::vector<double> dm_vals, global_vals;
    for (int i = 0; i < 20; ++i) {
        const auto params = random_params(1, rng);
        dm_vals.push_back(noisy_expectation_dm(g, params, noise, 1));
        global_vals.push_back(noisy_expectation_global(g, params, noise, 1));
    }
    CHECK(spearman_rho(dm_vals, global_vals) >= 0.8);
}

TEST_CASE("noise distortion grows with graph size on nested graphs") {
    NoiseModel noise;
    noise.shots.reset();
    Xoshiro256ss rng(19);
    std::vector<ParamVector> probe_points;
    for (int i = 0; i < 16; ++i) probe_points.push_back(random_params(1, rng));

    double previous = 0.0;
    for (std::uint32_t k = 4; k <= 9; ++k) {
        const Graph g = path_graph(k);
        REQUIRE(is_connected(g));
        double gap = 0.0;
        for (const auto& params : probe_points)
            gap += std::abs(noisy_expectation_dm(g, params, noise, 1) -
                            qaoa_expectation(g, params));
        gap /= static_cast<double>(probe_points.size());
        CHECK(gap >= previous - 1e-9);
        previous = gap;
    }
}

TEST_CASE("density matrix guard") {
    const Graph big = generate_cycle(11);
    NoiseModel noise;
    CHECK_THROWS_AS(noisy_expectation_dm(big, ParamVector({0.1}, {0.1}), noise, 1),
                    GuardError);
    // the routing evaluator falls back to the global surrogate
    const Evaluator eval = make_noisy_evaluator(noise, 1);
    CHECK_NOTHROW(eval(big, ParamVector({0.1}, {0.1})));
}
