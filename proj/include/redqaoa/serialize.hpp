#pragma once

#include <string>

#include <json.hpp>

#include "redqaoa/metrics.hpp"
#include "redqaoa/noise.hpp"
#include "redqaoa/pipeline.hpp"

namespace redqaoa {

using json = nlohmann::json;

std::string fingerprint_hex(std::uint64_t fp);

json to_json(const LandscapeSpec& spec);
LandscapeSpec landscape_spec_from_json(const json& j);

json to_json(const EnergyLandscape& l);
EnergyLandscape landscape_from_json(const json& j);

/// CSV: gamma_1..gamma_p, beta_1..beta_p, energy — one row per point.
std::string landscape_to_csv(const EnergyLandscape& l);

json to_json(const ComparisonReport& report);

/// {two_qubit_depol, single_qubit_depol, readout_flip, shots};
/// shots is an integer or the string "exact".
json to_json(const NoiseModel& m);
NoiseModel noise_model_from_json(const json& j);

json to_json(const ReductionResult& r);
json to_json(const OptimizationTrace& t);
std::string trace_to_csv(const OptimizationTrace& t);
json to_json(const PipelineResult& r);
json to_json(const BenchSummary& s);
json to_json(const SummaryStats& s);

} // namespace redqaoa
