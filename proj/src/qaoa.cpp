#include "redqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "redqaoa/common.hpp"
#include "redqaoa/kernels.hpp"

namespace redqaoa {

void ParamVector::validate() const {
    if (gammas.empty() || gammas.size() != betas.size())
        throw Error("parameter vector needs p >= 1 with equally many gammas and betas");
    for (const double v : gammas)
        if (!std::isfinite(v)) throw Error("non-finite gamma");
    for (const double v : betas)
        if (!std::isfinite(v)) throw Error("non-finite beta");
}

std::vector<double> ParamVector::flatten() const {
    std::vector<double> flat(gammas);
    flat.insert(flat.end(), betas.begin(), betas.end());
    return flat;
}

ParamVector ParamVector::from_flat(const std::vector<double>& flat) {
    if (flat.empty() || flat.size() % 2 != 0)
        throw Error("flat parameter vector must have even, nonzero length");
    const std::size_t p = flat.size() / 2;
    return ParamVector(std::vector<double>(flat.begin(), flat.begin() + p),
                       std::vector<double>(flat.begin() + p, flat.end()));
}

CutSpectrum cut_spectrum(const Graph& g) {
    check_statevector_guard(static_cast<int>(g.node_count()));
    const int n = static_cast<int>(g.node_count());
    const std::size_t dim = std::size_t{1} << n;
    CutSpectrum spec;
    spec.n = n;
    spec.values.assign(dim, 0);
    for (const auto& [u, v] : g.edges()) {
        const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (std::size_t z = 0; z < dim; ++z)
            spec.values[z] += static_cast<std::int32_t>(__builtin_parityll(z & mask));
    }
    spec.max_value =
        spec.values.empty()
            ? 0
            : *std::max_element(spec.values.begin(), spec.values.end());
    return spec;
}

MaxCutResult max_cut_bruteforce(const Graph& g) {
    const CutSpectrum spec = cut_spectrum(g);
    MaxCutResult best{0, 0};
    for (std::size_t z = 0; z < spec.values.size(); ++z) {
        if (spec.values[z] > best.cut_value) {
            best.cut_value = spec.values[z];
            best.witness = z;
        }
    }
    return best;
}

namespace {

struct Workspace {
    std::vector<double> re, im;
    std::vector<double> cos_tab, sin_tab;
};

Workspace& thread_workspace() {
    thread_local Workspace ws;
    return ws;
}

// Evolves |s> through p alternating layers into ws.re/ws.im.
void evolve(const CutSpectrum& spec, const ParamVector& params, Workspace& ws) {
    params.validate();
    const std::size_t dim = spec.values.size();
    const auto& ops = kernels::active_ops();

    ws.re.assign(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    ws.im.assign(dim, 0.0);
    ws.cos_tab.resize(static_cast<std::size_t>(spec.max_value) + 1);
    ws.sin_tab.resize(static_cast<std::size_t>(spec.max_value) + 1);

    for (int layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gammas[layer];
        for (std::int32_t c = 0; c <= spec.max_value; ++c) {
            ws.cos_tab[c] = std::cos(gamma * c);
            ws.sin_tab[c] = -std::sin(gamma * c); // e^{-i gamma c}
        }
        ops.phase_mul(ws.re.data(), ws.im.data(), spec.values.data(),
                      ws.cos_tab.data(), ws.sin_tab.data(), dim);

        const double cb = std::cos(params.betas[layer]);
        const double sb = std::sin(params.betas[layer]);
        for (int qubit = 0; qubit < spec.n; ++qubit)
            ops.mixer_pairs(ws.re.data(), ws.im.data(), cb, sb,
                            std::size_t{1} << qubit, dim);
    }
}

double expectation_from_spectrum(const CutSpectrum& spec,
                                 const ParamVector& params) {
    Workspace& ws = thread_workspace();
    evolve(spec, params, ws);
    return kernels::active_ops().weighted_prob_sum(
        ws.re.data(), ws.im.data(), spec.values.data(), spec.values.size());
}

} // namespace

double qaoa_expectation(const Graph& g, const ParamVector& params) {
    return expectation_from_spectrum(cut_spectrum(g), params);
}

std::vector<std::complex<double>> qaoa_statevector(const Graph& g,
                                                   const ParamVector& params) {
    const CutSpectrum spec = cut_spectrum(g);
    Workspace& ws = thread_workspace();
    evolve(spec, params, ws);
    std::vector<std::complex<double>> state(spec.values.size());
    for (std::size_t z = 0; z < state.size(); ++z)
        state[z] = {ws.re[z], ws.im[z]};
    return state;
}

std::vector<double> local_edge_expectations(const Graph& g,
                                            const ParamVector& params) {
    const CutSpectrum spec = cut_spectrum(g);
    Workspace& ws = thread_workspace();
    evolve(spec, params, ws);

    const std::size_t dim = spec.values.size();
    std::vector<double> result;
    result.reserve(g.edge_count());
    std::vector<std::int32_t> edge_cut(dim);
    for (const auto& [u, v] : g.edges()) {
        const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (std::size_t z = 0; z < dim; ++z)
            edge_cut[z] = static_cast<std::int32_t>(__builtin_parityll(z & mask));
        result.push_back(kernels::active_ops().weighted_prob_sum(
            ws.re.data(), ws.im.data(), edge_cut.data(), dim));
    }
    return result;
}

double local_edge_expectation(const Graph& g, Graph::Edge edge,
                              const ParamVector& params) {
    auto [u, v] = edge;
    if (u > v) std::swap(u, v);
    const auto& edges = g.edges();
    const auto it = std::find(edges.begin(), edges.end(), Graph::Edge{u, v});
    if (it == edges.end())
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") not in graph");
    const auto idx = static_cast<std::size_t>(it - edges.begin());
    return local_edge_expectations(g, params)[idx];
}

std::vector<double> qaoa_gradient(const Graph& g, const ParamVector& params,
                                  double step) {
    if (!(step > 0)) throw Error("finite-difference step must be positive");
    const CutSpectrum spec = cut_spectrum(g);
    params.validate();

    std::vector<double> flat = params.flatten();
    std::vector<double> grad(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const double saved = flat[i];
        flat[i] = saved + step;
        const double up = expectation_from_spectrum(spec, ParamVector::from_flat(flat));
        flat[i] = saved - step;
        const double down = expectation_from_spectrum(spec, ParamVector::from_flat(flat));
        flat[i] = saved;
        grad[i] = (up - down) / (2.0 * step);
    }
    return grad;
}

std::map<std::uint64_t, std::int64_t> qaoa_sample_counts(
    const Graph& g, const ParamVector& params, std::int64_t shots,
    std::uint64_t seed) {
    if (shots < 1) throw Error("shots must be >= 1");
    const CutSpectrum spec = cut_spectrum(g);
    Workspace& ws = thread_workspace();
    evolve(spec, params, ws);

    const std::size_t dim = spec.values.size();
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::size_t z = 0; z < dim; ++z) {
        acc += ws.re[z] * ws.re[z] + ws.im[z] * ws.im[z];
        cdf[z] = acc;
    }
    cdf.back() = 1.0; // guard against rounding at the top end

    Xoshiro256ss rng(seed);
    std::map<std::uint64_t, std::int64_t> counts;
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto z = static_cast<std::uint64_t>(it - cdf.begin());
        ++counts[std::min<std::uint64_t>(z, dim - 1)];
    }
    return counts;
}

Evaluator make_ideal_evaluator(const Graph& g) {
    auto spec = std::make_shared<const CutSpectrum>(cut_spectrum(g));
    const std::uint64_t fp = g.fingerprint();
    return [spec, fp](const Graph& graph, const ParamVector& params) {
        if (graph.fingerprint() != fp)
            throw Error("evaluator bound to a different graph");
        return expectation_from_spectrum(*spec, params);
    };
}

} // namespace redqaoa
