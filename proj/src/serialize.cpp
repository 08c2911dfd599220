#include "redqaoa/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "redqaoa/common.hpp"

namespace redqaoa {

std::string fingerprint_hex(std::uint64_t fp) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << fp;
    return out.str();
}

json to_json(const LandscapeSpec& spec) {
    if (spec.mode == LandscapeSpec::Mode::Grid)
        return json{{"mode", "grid"}, {"width", spec.width}};
    return json{{"mode", "random"},
                {"points", spec.point_count},
                {"seed", spec.seed}};
}

LandscapeSpec landscape_spec_from_json(const json& j) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "grid") return LandscapeSpec::grid(j.at("width").get<int>());
    if (mode == "random")
        return LandscapeSpec::random(j.at("points").get<int>(),
                                     j.at("seed").get<std::uint64_t>());
    throw Error("unknown landscape mode: " + mode);
}

json to_json(const EnergyLandscape& l) {
    json points = json::array();
    for (const auto& pt : l.points)
        points.push_back(json{{"gammas", pt.params.gammas},
                              {"betas", pt.params.betas},
                              {"energy", pt.energy}});
    return json{{"graph_fingerprint", fingerprint_hex(l.graph_fingerprint)},
                {"p", l.p},
                {"spec", to_json(l.spec)},
                {"points", std::move(points)}};
}

EnergyLandscape landscape_from_json(const json& j) {
    EnergyLandscape l;
    l.p = j.at("p").get<int>();
    l.graph_fingerprint = std::stoull(
        j.at("graph_fingerprint").get<std::string>(), nullptr, 16);
    l.spec = landscape_spec_from_json(j.at("spec"));
    for (const auto& pt : j.at("points")) {
        LandscapePoint point;
        point.params.gammas = pt.at("gammas").get<std::vector<double>>();
        point.params.betas = pt.at("betas").get<std::vector<double>>();
        point.energy = pt.at("energy").get<double>();
        l.points.push_back(std::move(point));
    }
    return l;
}

std::string landscape_to_csv(const EnergyLandscape& l) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (int i = 1; i <= l.p; ++i) out << "gamma_" << i << ",";
    for (int i = 1; i <= l.p; ++i) out << "beta_" << i << ",";
    out << "energy\n";
    for (const auto& pt : l.points) {
        for (const double g : pt.params.gammas) out << g << ",";
        for (const double b : pt.params.betas) out << b << ",";
        out << pt.energy << "\n";
    }
    return out.str();
}

json to_json(const ComparisonReport& report) {
    return json{{"mse", report.mse},
                {"mse_percent", report.mse_percent},
                {"optimal_distance", report.optimal_distance},
                {"point_count", report.point_count},
                {"normalization",
                 {{"a", {{"min", report.norm_a.min}, {"max", report.norm_a.max}}},
                  {"b", {{"min", report.norm_b.min}, {"max", report.norm_b.max}}}}}};
}

json to_json(const NoiseModel& m) {
    json j{{"two_qubit_depol", m.two_qubit_depol},
           {"single_qubit_depol", m.single_qubit_depol},
           {"readout_flip", m.readout_flip}};
    if (m.shots)
        j["shots"] = *m.shots;
    else
        j["shots"] = "exact";
    return j;
}

NoiseModel noise_model_from_json(const json& j) {
    NoiseModel m;
    m.two_qubit_depol = j.value("two_qubit_depol", m.two_qubit_depol);
    m.single_qubit_depol = j.value("single_qubit_depol", m.single_qubit_depol);
    m.readout_flip = j.value("readout_flip", m.readout_flip);
    if (j.contains("shots")) {
        if (j["shots"].is_string()) {
            if (j["shots"].get<std::string>() != "exact")
                throw Error("shots must be an integer or \"exact\"");
            m.shots.reset();
        } else {
            m.shots = j["shots"].get<std::int64_t>();
        }
    }
    m.validate();
    return m;
}

json to_json(const ReductionResult& r) {
    return json{{"subset", r.subset.members},
                {"reduced_edgelist", to_edge_list(r.reduced_graph)},
                {"and_ratio", r.and_ratio},
                {"objective", r.objective_value},
                {"final_objective", r.final_objective},
                {"steps", r.steps_taken},
                {"accepted_moves", r.accepted_moves},
                {"nodes", r.reduced_graph.node_count()},
                {"edges", r.reduced_graph.edge_count()},
                {"reduced", r.reduced}};
}

json to_json(const OptimizationTrace& t) {
    return json{{"graph_tag", t.graph_tag},
                {"best_gammas", t.best_params.gammas},
                {"best_betas", t.best_params.betas},
                {"best_energy", t.best_energy},
                {"best_restart", t.best_restart},
                {"total_evals", t.total_evals}};
}

std::string trace_to_csv(const OptimizationTrace& t) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "restart,eval,graph,kind,energy";
    if (!t.records.empty()) {
        const int p = t.records.front().params.layers();
        for (int i = 1; i <= p; ++i) out << ",gamma_" << i;
        for (int i = 1; i <= p; ++i) out << ",beta_" << i;
    }
    out << "\n";
    std::int64_t index = 0;
    for (const auto& rec : t.records) {
        out << rec.restart << "," << index++ << "," << t.graph_tag << ","
            << (rec.eval == EvalKind::Noisy ? "noisy" : "ideal") << ","
            << rec.energy;
        for (const double g : rec.params.gammas) out << "," << g;
        for (const double b : rec.params.betas) out << "," << b;
        out << "\n";
    }
    return out.str();
}

json to_json(const PipelineResult& r) {
    json j{{"reduction", to_json(r.reduction)},
           {"reduced_trace", to_json(r.reduced_trace)},
           {"refined_trace", to_json(r.refined_trace)},
           {"transferred_gammas", r.transferred_params.gammas},
           {"transferred_betas", r.transferred_params.betas},
           {"final_gammas", r.final_params.gammas},
           {"final_betas", r.final_params.betas},
           {"final_energy_ideal", r.final_energy_ideal},
           {"approximation_ratio", r.approximation_ratio},
           {"max_cut", r.max_cut},
           {"pipeline_evals", r.pipeline_evals},
           {"budget", r.budget}};
    if (r.baseline_ratio) {
        j["baseline_ratio"] = *r.baseline_ratio;
        j["baseline_evals"] = r.baseline_trace->total_evals;
    }
    return j;
}

json to_json(const SummaryStats& s) {
    return json{{"mean", s.mean}, {"median", s.median}, {"q1", s.q1}, {"q3", s.q3}};
}

json to_json(const BenchSummary& s) {
    json graphs = json::array();
    for (const auto& rec : s.graphs) {
        json g{{"name", rec.name},
               {"nodes", rec.nodes},
               {"edges", rec.edges},
               {"skipped", rec.skipped}};
        if (rec.skipped) {
            g["skip_reason"] = rec.skip_reason;
        } else {
            g["reduced_nodes"] = rec.reduced_nodes;
            g["reduced_edges"] = rec.reduced_edges;
            g["node_reduction"] = rec.node_reduction;
            g["edge_reduction"] = rec.edge_reduction;
            g["and_ratio"] = rec.and_ratio;
            g["reduction_seconds"] = rec.reduction_seconds;
            if (!rec.skip_reason.empty()) g["note"] = rec.skip_reason;
            json mses = json::object();
            for (const auto& [p, m] : rec.mse_per_p)
                mses["p" + std::to_string(p)] = m;
            g["mse"] = std::move(mses);
        }
        graphs.push_back(std::move(g));
    }
    json mse_summary = json::object();
    for (const auto& [p, stats] : s.mse_per_p)
        mse_summary["p" + std::to_string(p)] = to_json(stats);
    return json{{"graphs", std::move(graphs)},
                {"node_reduction", to_json(s.node_reduction)},
                {"edge_reduction", to_json(s.edge_reduction)},
                {"mse", std::move(mse_summary)},
                {"skipped", s.skipped}};
}

} // namespace redqaoa
