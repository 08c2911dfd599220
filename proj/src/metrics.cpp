#include "redqaoa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "redqaoa/common.hpp"

namespace redqaoa {

NormalizationInfo landscape_range(const EnergyLandscape& l) {
    if (l.points.empty()) throw Error("empty landscape");
    NormalizationInfo info{l.points.front().energy, l.points.front().energy};
    for (const auto& pt : l.points) {
        info.min = std::min(info.min, pt.energy);
        info.max = std::max(info.max, pt.energy);
    }
    return info;
}

EnergyLandscape normalize_landscape(const EnergyLandscape& l) {
    const auto [lo, hi] = landscape_range(l);
    if (!(hi > lo))
        throw Error("degenerate landscape: all energies equal, cannot normalize");
    EnergyLandscape out = l;
    const double span = hi - lo;
    for (auto& pt : out.points) pt.energy = (pt.energy - lo) / span;
    return out;
}

namespace {

void check_comparable(const EnergyLandscape& a, const EnergyLandscape& b) {
    if (a.p != b.p || !(a.spec == b.spec) || a.size() != b.size())
        throw Error("landscapes sampled from different specs are not comparable");
}

bool looks_normalized(const EnergyLandscape& l) {
    const auto [lo, hi] = landscape_range(l);
    return std::abs(lo) <= 1e-12 && std::abs(hi - 1.0) <= 1e-12;
}

} // namespace

double mse(const EnergyLandscape& a, const EnergyLandscape& b) {
    check_comparable(a, b);
    if (!looks_normalized(a) || !looks_normalized(b))
        throw Error("mse expects normalized landscapes");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.points[i].energy - b.points[i].energy;
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

double approximation_ratio(double achieved, int ground_truth) {
    if (ground_truth < 1)
        throw Error("approximation ratio undefined for graphs without edges");
    return achieved / static_cast<double>(ground_truth);
}

namespace {

double wrapped_diff(double x, double period) {
    double d = std::fmod(std::abs(x), period);
    return std::min(d, period - d);
}

} // namespace

double torus_distance(const ParamVector& a, const ParamVector& b) {
    if (a.layers() != b.layers())
        throw Error("parameter vectors have different layer counts");
    constexpr double pi = std::numbers::pi;
    double acc = 0.0;
    for (int l = 0; l < a.layers(); ++l) {
        const double dg = wrapped_diff(a.gammas[l] - b.gammas[l], 2.0 * pi);
        const double db = wrapped_diff(a.betas[l] - b.betas[l], pi);
        acc += dg * dg + db * db;
    }
    return std::sqrt(acc);
}

namespace {

std::vector<std::size_t> top_indices(const EnergyLandscape& l, int k) {
    std::vector<std::size_t> idx(l.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return l.points[i].energy > l.points[j].energy;
    });
    idx.resize(std::min<std::size_t>(static_cast<std::size_t>(k), idx.size()));
    return idx;
}

} // namespace

double optimal_point_distance(const EnergyLandscape& a,
                              const EnergyLandscape& b, int top_k) {
    check_comparable(a, b);
    if (top_k < 1) throw Error("top_k must be >= 1");
    const auto ia = top_indices(a, top_k);
    const auto ib = top_indices(b, top_k);
    double acc = 0.0;
    for (const auto i : ia) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto j : ib)
            best = std::min(best,
                            torus_distance(a.points[i].params, b.points[j].params));
        acc += best;
    }
    return acc / static_cast<double>(ia.size());
}

ComparisonReport compare_landscapes(const EnergyLandscape& a,
                                    const EnergyLandscape& b, int top_k) {
    ComparisonReport report;
    report.norm_a = landscape_range(a);
    report.norm_b = landscape_range(b);
    const auto na = normalize_landscape(a);
    const auto nb = normalize_landscape(b);
    report.mse = mse(na, nb);
    report.mse_percent = report.mse * 100.0;
    report.optimal_distance = optimal_point_distance(a, b, top_k);
    report.point_count = static_cast<int>(a.size());
    return report;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw Error("spearman needs two equally sized samples of >= 2 points");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    if (vx == 0 || vy == 0) throw Error("spearman undefined for constant sample");
    return cov / std::sqrt(vx * vy);
}

} // namespace redqaoa
