#include "redqaoa/landscape.hpp"

#include <cmath>
#include <numbers>

#include "redqaoa/common.hpp"
#include "redqaoa/parallel.hpp"

namespace redqaoa {

LandscapeSpec LandscapeSpec::grid(int width) {
    LandscapeSpec s;
    s.mode = Mode::Grid;
    s.width = width;
    return s;
}

LandscapeSpec LandscapeSpec::random(int point_count, std::uint64_t seed) {
    LandscapeSpec s;
    s.mode = Mode::Random;
    s.point_count = point_count;
    s.seed = seed;
    return s;
}

void LandscapeSpec::validate(int p) const {
    if (p < 1) throw Error("layer count must be >= 1");
    if (mode == Mode::Grid) {
        if (p != 1) throw Error("grid sampling is defined for p = 1 only");
        if (width < 2) throw Error("grid width must be >= 2");
    } else {
        if (point_count < 1) throw Error("random sampling needs >= 1 point");
    }
}

std::vector<ParamVector> landscape_points(const LandscapeSpec& spec, int p) {
    spec.validate(p);
    constexpr double pi = std::numbers::pi;
    std::vector<ParamVector> pts;

    if (spec.mode == LandscapeSpec::Mode::Grid) {
        pts.reserve(static_cast<std::size_t>(spec.width) * spec.width);
        for (int gi = 0; gi < spec.width; ++gi) {
            const double gamma = 2.0 * pi * gi / (spec.width - 1);
            for (int bi = 0; bi < spec.width; ++bi) {
                const double beta = pi * bi / (spec.width - 1);
                pts.push_back(ParamVector({gamma}, {beta}));
            }
        }
        return pts;
    }

    Xoshiro256ss rng(spec.seed);
    pts.reserve(static_cast<std::size_t>(spec.point_count));
    for (int i = 0; i < spec.point_count; ++i) {
        std::vector<double> gammas(p), betas(p);
        for (int l = 0; l < p; ++l) gammas[l] = rng.uniform(0.0, 2.0 * pi);
        for (int l = 0; l < p; ++l) betas[l] = rng.uniform(0.0, pi);
        pts.emplace_back(std::move(gammas), std::move(betas));
    }
    return pts;
}

EnergyLandscape sample_landscape(const Graph& g, int p,
                                 const LandscapeSpec& spec,
                                 const Evaluator& eval, unsigned threads) {
    auto pts = landscape_points(spec, p);
    EnergyLandscape land;
    land.p = p;
    land.graph_fingerprint = g.fingerprint();
    land.spec = spec;
    land.points.resize(pts.size());
    parallel_for(pts.size(), threads, [&](std::size_t i) {
        land.points[i].params = std::move(pts[i]);
        land.points[i].energy = eval(g, land.points[i].params);
    });
    return land;
}

} // namespace redqaoa
