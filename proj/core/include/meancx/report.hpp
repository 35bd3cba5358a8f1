#pragma once

// JSON and CSV renderings of every result type. Output contains no timestamps or host
// details, so equal inputs give byte-identical reports.

#include <string>

#include <nlohmann/json.hpp>

#include "meancx/complexity.hpp"
#include "meancx/folner.hpp"
#include "meancx/group_measure.hpp"
#include "meancx/spectrum.hpp"

namespace meancx {

std::string version();

nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const GroupMeasure& rho);
nlohmann::json to_json(const VerdictRule& rule);
nlohmann::json to_json(const ComplexityEstimate& estimate);
nlohmann::json to_json(const ComplexityProfile& profile);
nlohmann::json to_json(const MaxMeanResult& result);
nlohmann::json to_json(const OrbitNetReport& report);
nlohmann::json to_json(const EquicontinuityReport& report);
nlohmann::json to_json(const BirkhoffReport& report);
nlohmann::json to_json(const ShulmanResult& result);
nlohmann::json to_json(const CrossValidationConfig& config);
nlohmann::json to_json(const ConsistencyReport& report);

/// One row per window (profiles, nets), candidate (max-mean), delta level
/// (equicontinuity) or component (cross-validation).
std::string to_csv(const ComplexityProfile& profile);
std::string to_csv(const MaxMeanResult& result);
std::string to_csv(std::span<const OrbitNetReport> reports);
std::string to_csv(const EquicontinuityReport& report);
std::string to_csv(const ShulmanResult& result);
std::string to_csv(const ConsistencyReport& report);

}  // namespace meancx
