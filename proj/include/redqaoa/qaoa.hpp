#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "redqaoa/graph.hpp"

namespace redqaoa {

/// p-layer QAOA angles in radians: gammas drive the cost phases, betas
/// the transverse-field mixer.
struct ParamVector {
    std::vector<double> gammas;
    std::vector<double> betas;

    ParamVector() = default;
    ParamVector(std::vector<double> g, std::vector<double> b)
        : gammas(std::move(g)), betas(std::move(b)) {}

    int layers() const { return static_cast<int>(gammas.size()); }

    /// Throws unless |gammas| == |betas| >= 1 and all values are finite.
    void validate() const;

    /// Flat layout [gamma_1..gamma_p, beta_1..beta_p].
    std::vector<double> flatten() const;
    static ParamVector from_flat(const std::vector<double>& flat);

    bool operator==(const ParamVector&) const = default;
};

/// Diagonal of the cut-counting cost observable: values[z] is the number
/// of edges cut by bitstring z. Bit i of z is node i (little-endian).
struct CutSpectrum {
    int n = 0;
    std::vector<std::int32_t> values; // size 2^n
    std::int32_t max_value = 0;
};

CutSpectrum cut_spectrum(const Graph& g);

struct MaxCutResult {
    std::int32_t cut_value = 0;
    std::uint64_t witness = 0; // smallest attaining bitstring
};

/// Exhaustive ground truth over all 2^n bitstrings.
MaxCutResult max_cut_bruteforce(const Graph& g);

/// <psi(gamma,beta)| C |psi(gamma,beta)> via statevector evolution:
/// uniform superposition, then per layer a diagonal phase multiply and n
/// single-qubit mixer rotations. Maximization convention: larger is a
/// better cut.
double qaoa_expectation(const Graph& g, const ParamVector& params);

/// Full evolved state, for inspection and tests.
std::vector<std::complex<double>> qaoa_statevector(const Graph& g,
                                                   const ParamVector& params);

/// Contribution of one edge's 1/2 (I - Z_u Z_v) term; lies in [0, 1].
double local_edge_expectation(const Graph& g, Graph::Edge edge,
                              const ParamVector& params);

/// All per-edge contributions from a single evolution, ordered like
/// g.edges(). Summing them reproduces qaoa_expectation.
std::vector<double> local_edge_expectations(const Graph& g,
                                            const ParamVector& params);

/// Central finite differences of qaoa_expectation, flat layout
/// [d/dgamma_1.., d/dbeta_1..].
std::vector<double> qaoa_gradient(const Graph& g, const ParamVector& params,
                                  double step = 1e-5);

/// Multinomial sample of the evolved state's measurement distribution;
/// counts sum to shots, deterministic per seed.
std::map<std::uint64_t, std::int64_t> qaoa_sample_counts(
    const Graph& g, const ParamVector& params, std::int64_t shots,
    std::uint64_t seed);

/// Expectation evaluator applied to (graph, params). Implementations are
/// pure functions and safe to call from multiple threads.
using Evaluator = std::function<double(const Graph&, const ParamVector&)>;

/// Noiseless evaluator with the cut spectrum precomputed for g; it
/// rejects graphs other than the one it was built for.
Evaluator make_ideal_evaluator(const Graph& g);

} // namespace redqaoa
