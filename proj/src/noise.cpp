#include "redqaoa/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "redqaoa/common.hpp"
#include "redqaoa/kernels.hpp"

namespace redqaoa {

void NoiseModel::validate() const {
    if (!(two_qubit_depol >= 0.0 && two_qubit_depol <= 1.0))
        throw Error("two_qubit_depol must lie in [0, 1]");
    if (!(single_qubit_depol >= 0.0 && single_qubit_depol <= 1.0))
        throw Error("single_qubit_depol must lie in [0, 1]");
    if (!(readout_flip >= 0.0 && readout_flip <= 0.5))
        throw Error("readout_flip must lie in [0, 0.5]");
    if (shots && *shots < 1) throw Error("shots must be >= 1");
}

DensityMatrix::DensityMatrix(int n_qubits) : n_(n_qubits) {
    const std::size_t d = dim();
    re_.assign(d * d, 0.0);
    im_.assign(d * d, 0.0);
}

DensityMatrix::DensityMatrix(int n_qubits,
                             std::vector<std::complex<double>> entries)
    : DensityMatrix(n_qubits) {
    const std::size_t d = dim();
    if (entries.size() != d * d)
        throw Error("density matrix needs 4^n entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        re_[i] = entries[i].real();
        im_[i] = entries[i].imag();
    }
}

double DensityMatrix::trace_real() const {
    const std::size_t d = dim();
    double t = 0.0;
    for (std::size_t z = 0; z < d; ++z) t += re_[z * d + z];
    return t;
}

std::vector<double> DensityMatrix::diagonal() const {
    const std::size_t d = dim();
    std::vector<double> diag(d);
    for (std::size_t z = 0; z < d; ++z) diag[z] = re_[z * d + z];
    return diag;
}

namespace {

// Inserts a 0 bit at position `bit` of a compacted index.
std::size_t insert_bit(std::size_t idx, int bit) {
    const std::size_t low = idx & ((std::size_t{1} << bit) - 1);
    return ((idx >> bit) << (bit + 1)) | low;
}

// rho <- (1-p) rho + p * Tr_t(rho) (x) I/2 on qubit t. Works per
// (row-rest, col-rest) block so every entry is touched exactly once.
void depolarize_single(DensityMatrix& dm, int t, double p) {
    if (p <= 0.0) return;
    const std::size_t d = dm.dim();
    const std::size_t bit = std::size_t{1} << t;
    auto& re = dm.re();
    auto& im = dm.im();
    const double keep = 1.0 - p;
    const double q = p / 2.0;

    for (std::size_t zi = 0; zi < d / 2; ++zi) {
        const std::size_t z0 = insert_bit(zi, t);
        for (std::size_t wi = 0; wi < d / 2; ++wi) {
            const std::size_t w0 = insert_bit(wi, t);
            const std::size_t i00 = z0 * d + w0;
            const std::size_t i01 = z0 * d + (w0 | bit);
            const std::size_t i10 = (z0 | bit) * d + w0;
            const std::size_t i11 = (z0 | bit) * d + (w0 | bit);
            const double sr = re[i00] + re[i11];
            const double si = im[i00] + im[i11];
            re[i00] = keep * re[i00] + q * sr;
            im[i00] = keep * im[i00] + q * si;
            re[i11] = keep * re[i11] + q * sr;
            im[i11] = keep * im[i11] + q * si;
            re[i01] *= keep;
            im[i01] *= keep;
            re[i10] *= keep;
            im[i10] *= keep;
        }
    }
}

// rho <- (1-p) rho + p * Tr_{uv}(rho) (x) I/4 on qubit pair (u, v).
void depolarize_pair(DensityMatrix& dm, int u, int v, double p) {
    if (p <= 0.0) return;
    const std::size_t d = dm.dim();
    auto& re = dm.re();
    auto& im = dm.im();
    const int lo = std::min(u, v), hi = std::max(u, v);
    const std::size_t masks[4] = {0, std::size_t{1} << lo, std::size_t{1} << hi,
                                  (std::size_t{1} << lo) | (std::size_t{1} << hi)};
    const double keep = 1.0 - p;
    const double q = p / 4.0;
    const std::size_t quarter = d / 4;

    for (std::size_t zi = 0; zi < quarter; ++zi) {
        const std::size_t z0 = insert_bit(insert_bit(zi, lo), hi);
        for (std::size_t wi = 0; wi < quarter; ++wi) {
            const std::size_t w0 = insert_bit(insert_bit(wi, lo), hi);
            double sr = 0, si = 0;
            for (const std::size_t m : masks) {
                sr += re[(z0 | m) * d + (w0 | m)];
                si += im[(z0 | m) * d + (w0 | m)];
            }
            for (const std::size_t a : masks) {
                for (const std::size_t b : masks) {
                    const std::size_t i = (z0 | a) * d + (w0 | b);
                    re[i] *= keep;
                    im[i] *= keep;
                    if (a == b) {
                        re[i] += q * sr;
                        im[i] += q * si;
                    }
                }
            }
        }
    }
}

// U rho U^dagger for the single-qubit mixer rotation on qubit t.
void mixer_on_dm(DensityMatrix& dm, int t, double cb, double sb) {
    const std::size_t d = dm.dim();
    auto& re = dm.re();
    auto& im = dm.im();
    const auto& ops = kernels::active_ops();
    // rows: pairs of full rows, stride d * 2^t over the flat array
    ops.mixer_pairs(re.data(), im.data(), cb, sb, d << t, d * d);
    // columns: within each row, conjugated coefficients
    ops.mixer_pairs(re.data(), im.data(), cb, -sb, std::size_t{1} << t, d * d);
}

// Applies the phase e^{-i gamma} to basis states where the edge is cut,
// i.e. rho_{zw} *= phase^(cut(z)) * conj(phase)^(cut(w)).
void edge_phase_on_dm(DensityMatrix& dm, const std::vector<std::int32_t>& bits,
                      double gamma) {
    const std::size_t d = dm.dim();
    auto& re = dm.re();
    auto& im = dm.im();
    const auto& ops = kernels::active_ops();
    const double cg = std::cos(gamma), sg = -std::sin(gamma);
    const double col_cos[2] = {1.0, cg};
    const double col_sin[2] = {0.0, -sg}; // conjugate for the bra side
    for (std::size_t z = 0; z < d; ++z) {
        double* row_re = re.data() + z * d;
        double* row_im = im.data() + z * d;
        if (bits[z]) ops.scale_complex(row_re, row_im, cg, sg, d);
        ops.phase_mul(row_re, row_im, bits.data(), col_cos, col_sin, d);
    }
}

std::vector<double> fold_readout(std::vector<double> diag, int n, double flip) {
    if (flip <= 0.0) return diag;
    const std::size_t d = diag.size();
    std::vector<double> next(d);
    for (int t = 0; t < n; ++t) {
        const std::size_t bit = std::size_t{1} << t;
        for (std::size_t z = 0; z < d; ++z)
            next[z] = (1.0 - flip) * diag[z] + flip * diag[z ^ bit];
        diag.swap(next);
    }
    return diag;
}

} // namespace

DensityMatrix noisy_density_matrix(const Graph& g, const ParamVector& params,
                                   const NoiseModel& noise) {
    noise.validate();
    params.validate();
    const int n = static_cast<int>(g.node_count());
    if (n > kDensityMatrixGuard)
        throw GuardError("density-matrix path capped at " +
                         std::to_string(kDensityMatrixGuard) + " qubits, got " +
                         std::to_string(n));

    const std::size_t d = std::size_t{1} << n;
    DensityMatrix dm(n);
    std::fill(dm.re().begin(), dm.re().end(),
              1.0 / static_cast<double>(d)); // |s><s|

    // per-edge cut indicator over basis states, reused across layers
    std::vector<std::vector<std::int32_t>> edge_bits;
    edge_bits.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        std::vector<std::int32_t> bits(d);
        const std::uint64_t mask =
            (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (std::size_t z = 0; z < d; ++z)
            bits[z] = static_cast<std::int32_t>(__builtin_parityll(z & mask));
        edge_bits.push_back(std::move(bits));
    }

    for (int layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gammas[layer];
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            edge_phase_on_dm(dm, edge_bits[e], gamma);
            const auto& [u, v] = g.edges()[e];
            depolarize_pair(dm, static_cast<int>(u), static_cast<int>(v),
                            noise.two_qubit_depol);
        }
        const double cb = std::cos(params.betas[layer]);
        const double sb = std::sin(params.betas[layer]);
        for (int t = 0; t < n; ++t) {
            mixer_on_dm(dm, t, cb, sb);
            depolarize_single(dm, t, noise.single_qubit_depol);
        }
    }
    return dm;
}

namespace {

double sampled_expectation(const std::vector<double>& probs,
                           const CutSpectrum& spec, std::int64_t shots,
                           std::uint64_t seed) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < probs.size(); ++z) {
        acc += std::max(probs[z], 0.0);
        cdf[z] = acc;
    }
    const double total = cdf.back();
    Xoshiro256ss rng(seed);
    double energy = 0.0;
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto z = std::min<std::size_t>(
            static_cast<std::size_t>(it - cdf.begin()), probs.size() - 1);
        energy += spec.values[z];
    }
    return energy / static_cast<double>(shots);
}

} // namespace

double noisy_expectation_dm(const Graph& g, const ParamVector& params,
                            const NoiseModel& noise, std::uint64_t seed) {
    const DensityMatrix dm = noisy_density_matrix(g, params, noise);
    const auto probs = fold_readout(dm.diagonal(),
                                    static_cast<int>(g.node_count()),
                                    noise.readout_flip);
    const CutSpectrum spec = cut_spectrum(g);
    if (noise.exact_shots()) {
        double energy = 0.0;
        for (std::size_t z = 0; z < probs.size(); ++z)
            energy += probs[z] * spec.values[z];
        return energy;
    }
    return sampled_expectation(probs, spec, *noise.shots, seed);
}

double noisy_expectation_global(const Graph& g, const ParamVector& params,
                                const NoiseModel& noise, std::uint64_t seed) {
    noise.validate();
    const double ideal = qaoa_expectation(g, params);
    const double half = static_cast<double>(g.edge_count()) / 2.0;
    const double p = params.layers();
    const double fidelity =
        std::pow(1.0 - noise.two_qubit_depol,
                 p * static_cast<double>(g.edge_count())) *
        std::pow(1.0 - noise.single_qubit_depol,
                 p * static_cast<double>(g.node_count()));
    double energy = fidelity * ideal + (1.0 - fidelity) * half;
    if (!noise.exact_shots()) {
        const double sigma =
            static_cast<double>(g.edge_count()) /
            (2.0 * std::sqrt(static_cast<double>(*noise.shots)));
        Xoshiro256ss rng(seed);
        // Box-Muller
        const double u1 = std::max(rng.uniform(), 1e-300);
        const double u2 = rng.uniform();
        energy += sigma * std::sqrt(-2.0 * std::log(u1)) *
                  std::cos(2.0 * std::numbers::pi * u2);
    }
    return energy;
}

Evaluator make_noisy_evaluator(const NoiseModel& noise, std::uint64_t seed) {
    noise.validate();
    return [noise, seed](const Graph& g, const ParamVector& params) {
        const auto flat = params.flatten();
        const std::uint64_t point_seed =
            fnv1a(flat.data(), flat.size() * sizeof(double), seed ^ 0x9e3779b97f4a7c15ULL);
        if (static_cast<int>(g.node_count()) <= kDensityMatrixGuard)
            return noisy_expectation_dm(g, params, noise, point_seed);
        return noisy_expectation_global(g, params, noise, point_seed);
    };
}

} // namespace redqaoa
