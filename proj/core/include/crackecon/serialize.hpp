#pragma once

#include <json.hpp>

#include "crackecon/attacker.hpp"
#include "crackecon/bounds.hpp"
#include "crackecon/dp_perturb.hpp"
#include "crackecon/zipf_fit.hpp"
#include "crackecon/zipf_threshold.hpp"

namespace crackecon {

/// Fit results share one fixed key set regardless of family so golden-file
/// consumers see a stable schema:
///   {method, y, r, s, C, z, r_squared, ks, cutoff}
/// Keys that do not apply to the family are null.
nlohmann::json to_json(const CdfZipfFit& fit);
nlohmann::json to_json(const PdfZipfFit& fit);

nlohmann::json to_json(const AttackOutcome& outcome);
nlohmann::json to_json(const CdfThresholdResult& result);
nlohmann::json to_json(const PdfThresholdResult& result, bool with_bounds);
nlohmann::json to_json(const BoundsResult& result);
nlohmann::json to_json(const FitImpactStudy& study);

}  // namespace crackecon
