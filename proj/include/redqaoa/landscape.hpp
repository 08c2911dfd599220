#pragma once

#include <cstdint>
#include <vector>

#include "redqaoa/qaoa.hpp"

namespace redqaoa {

/// How a landscape is sampled. Axis ranges are fixed: beta in [0, pi],
/// gamma in [0, 2*pi], for every layer.
struct LandscapeSpec {
    enum class Mode { Grid, Random };

    Mode mode = Mode::Random;
    int width = 0;            // grid: points per axis (p = 1 only)
    int point_count = 0;      // random: number of points
    std::uint64_t seed = 0;   // random mode

    static LandscapeSpec grid(int width);
    static LandscapeSpec random(int point_count, std::uint64_t seed);

    void validate(int p) const;
    bool operator==(const LandscapeSpec&) const = default;
};

struct LandscapePoint {
    ParamVector params;
    double energy = 0.0;
};

/// Sampled map from parameter points to expectation values.
struct EnergyLandscape {
    int p = 1;
    std::uint64_t graph_fingerprint = 0;
    LandscapeSpec spec;
    std::vector<LandscapePoint> points;

    std::size_t size() const { return points.size(); }
};

/// The parameter points a spec induces, independent of any graph. Grid
/// points are laid out row-major with gamma as the outer axis; random
/// points draw each angle independently from the seeded generator.
std::vector<ParamVector> landscape_points(const LandscapeSpec& spec, int p);

/// Evaluates `eval` at every sample point, optionally across threads.
/// Results are identical for any thread count.
EnergyLandscape sample_landscape(const Graph& g, int p,
                                 const LandscapeSpec& spec,
                                 const Evaluator& eval, unsigned threads = 1);

} // namespace redqaoa
