#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "redqaoa/qaoa.hpp"

namespace redqaoa {

/// Synthetic depolarizing + readout + shot-count noise description. A
/// two-qubit channel follows every cost-layer edge term, a single-qubit
/// channel every mixer rotation, and readout flips fold into the
/// measurement distribution. shots == nullopt means exact expectation.
struct NoiseModel {
    double two_qubit_depol = 0.01;
    double single_qubit_depol = 0.001;
    double readout_flip = 0.02;
    std::optional<std::int64_t> shots = 8192;

    static NoiseModel none() { return {0.0, 0.0, 0.0, std::nullopt}; }
    bool exact_shots() const { return !shots.has_value(); }
    void validate() const;
};

/// Row-major 2^n x 2^n density matrix.
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, std::vector<std::complex<double>> entries);

    int qubits() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }
    std::complex<double> at(std::size_t row, std::size_t col) const {
        return {re_[row * dim() + col], im_[row * dim() + col]};
    }
    double trace_real() const;
    std::vector<double> diagonal() const;

    // split storage, used by the evolution kernels
    std::vector<double>& re() { return re_; }
    std::vector<double>& im() { return im_; }
    const std::vector<double>& re() const { return re_; }
    const std::vector<double>& im() const { return im_; }

  private:
    friend DensityMatrix noisy_density_matrix(const Graph&, const ParamVector&,
                                              const NoiseModel&);
    DensityMatrix(int n_qubits);
    int n_;
    std::vector<double> re_, im_;
};

/// Evolves rho = |s><s| through the noisy circuit (all channels applied,
/// readout not yet folded). Guarded at 10 qubits.
DensityMatrix noisy_density_matrix(const Graph& g, const ParamVector& params,
                                   const NoiseModel& noise);

/// Tr(rho C) after folding readout flips into the diagonal, plus
/// multinomial shot noise when shots are finite. Deterministic per seed.
double noisy_expectation_dm(const Graph& g, const ParamVector& params,
                            const NoiseModel& noise, std::uint64_t seed);

/// Cheap surrogate for any simulable size:
/// E = F * E_ideal + (1 - F) * |E|/2 with
/// F = (1 - p2)^(p |edges|) * (1 - p1)^(p n), plus Gaussian shot noise of
/// variance |edges|^2 / (4 shots) when shots are finite.
double noisy_expectation_global(const Graph& g, const ParamVector& params,
                                const NoiseModel& noise, std::uint64_t seed);

/// Evaluator that routes to the density-matrix path when the graph fits
/// the 10-qubit guard and the global surrogate otherwise. Per-point
/// seeds derive from (seed, params), so evaluation order cannot change
/// results.
Evaluator make_noisy_evaluator(const NoiseModel& noise, std::uint64_t seed);

} // namespace redqaoa
