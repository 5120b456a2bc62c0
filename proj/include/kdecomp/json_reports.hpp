#pragma once

#include "json.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/estimator.hpp"
#include "kdecomp/lightcone.hpp"

namespace kdecomp {

// Stable JSON forms of the report types. Keys appear exactly in field
// declaration order and contain nothing non-deterministic, so equal inputs
// serialize to identical bytes.

nlohmann::ordered_json to_json(const ComplexityEstimate& estimate);
nlohmann::ordered_json to_json(const DecompositionReport& report);
nlohmann::ordered_json to_json(const LightconeReport& report);
nlohmann::ordered_json to_json(const FilterOutcome& outcome);

}  // namespace kdecomp
