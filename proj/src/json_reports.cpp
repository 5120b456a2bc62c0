#include "kdecomp/json_reports.hpp"

namespace kdecomp {

using nlohmann::ordered_json;

ordered_json to_json(const ComplexityEstimate& estimate) {
    ordered_json j;
    j["k_hat"] = estimate.k_hat;
    j["raw_len"] = estimate.raw_len;
    j["backend_id"] = estimate.backend_id;
    return j;
}

ordered_json to_json(const DecompositionReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["k_full"] = to_json(report.k_full);
    ordered_json projections = ordered_json::array();
    for (const auto& entry : report.per_projection) {
        ordered_json p;
        p["dropped_cols"] = entry.spec.dropped_cols();
        p["coefficient"] = entry.coefficient;
        p["estimate"] = to_json(entry.estimate);
        projections.push_back(std::move(p));
    }
    j["per_projection"] = std::move(projections);
    j["weighted_sum"] = report.weighted_sum;
    j["lhs"] = report.lhs;
    j["ratio"] = report.ratio;
    j["lower_ok"] = report.lower_ok;
    if (report.upper_ok) {
        j["upper_ok"] = *report.upper_ok;
    } else {
        j["upper_ok"] = nullptr;  // skipped: no program bound supplied
    }
    j["slack_used"] = report.slack_used;
    j["backend_id"] = report.backend_id;
    return j;
}

ordered_json to_json(const LightconeReport& report) {
    ordered_json j;
    j["region"] = {{"tag", std::string(to_string(report.region.tag))},
                   {"epsilon", report.region.epsilon.render()}};
    j["m_region"] = report.m_region;
    ordered_json subsets;
    for (const auto& [name, estimate] : report.complexity_by_subset) {
        ordered_json e;
        e["k_hat"] = estimate.k_hat;
        e["raw_len"] = estimate.raw_len;
        e["density"] = estimate.density();
        subsets[name] = std::move(e);
    }
    j["complexity_by_subset"] = std::move(subsets);
    j["backend_id"] = report.backend_id;
    j["seed"] = report.seed;
    return j;
}

ordered_json to_json(const FilterOutcome& outcome) {
    ordered_json j;
    j["mode"] = outcome.high_pass ? "high" : "low";
    j["threshold"] = outcome.threshold;
    ordered_json passed = ordered_json::array();
    for (RegionTag tag : outcome.passed) passed.push_back(std::string(to_string(tag)));
    j["passed"] = std::move(passed);
    ordered_json reports = ordered_json::array();
    for (const auto& report : outcome.reports) reports.push_back(to_json(report));
    j["reports"] = std::move(reports);
    return j;
}

}  // namespace kdecomp
