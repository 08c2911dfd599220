#pragma once

#include <vector>

#include "redqaoa/landscape.hpp"

namespace redqaoa {

struct NormalizationInfo {
    double min = 0.0;
    double max = 0.0;
};

NormalizationInfo landscape_range(const EnergyLandscape& l);

/// Min-max rescale of the energies to [0, 1]; parameter points are left
/// untouched. Throws on a constant landscape.
EnergyLandscape normalize_landscape(const EnergyLandscape& l);

/// Mean squared pointwise difference. Both inputs must be normalized and
/// sampled from the same spec (which pins the parameter points).
double mse(const EnergyLandscape& a, const EnergyLandscape& b);

/// achieved / ground_truth; ground truth is the brute-force MaxCut value.
double approximation_ratio(double achieved, int ground_truth);

/// Shortest distance on the parameter torus (gamma period 2*pi, beta
/// period pi, per layer).
double torus_distance(const ParamVector& a, const ParamVector& b);

/// Mean over a's top_k highest-energy points of the torus distance to
/// the nearest of b's top_k points.
double optimal_point_distance(const EnergyLandscape& a,
                              const EnergyLandscape& b, int top_k = 1);

struct ComparisonReport {
    double mse = 0.0;
    double mse_percent = 0.0; // mse * 100
    double optimal_distance = 0.0;
    int point_count = 0;
    NormalizationInfo norm_a, norm_b;
};

/// Normalizes both inputs, then reports MSE and optimal-point distance.
ComparisonReport compare_landscapes(const EnergyLandscape& a,
                                    const EnergyLandscape& b, int top_k = 1);

/// Spearman rank correlation with average ranks for ties.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

} // namespace redqaoa
