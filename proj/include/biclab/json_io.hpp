#pragma once

#include <json.hpp>

#include "biclab/biclique.hpp"
#include "biclab/conjecture.hpp"
#include "biclab/distance.hpp"
#include "biclab/obstruction.hpp"
#include "biclab/recognition.hpp"

namespace biclab {

/// Schema tags carried in the "schema" field of every JSON record.
inline constexpr const char* kCheckSchema = "biclique-lab/check/1";
inline constexpr const char* kCatalogueSchema = "biclique-lab/catalogue/1";
inline constexpr const char* kFindingSchema = "biclique-lab/finding/1";
inline constexpr const char* kBicliqueSchema = "biclique-lab/bicliques/1";
inline constexpr const char* kDistanceSchema = "biclique-lab/distance/1";

nlohmann::json to_json(const Graph& g, const ObstructionReport& report);
nlohmann::json to_json(const CatalogueEntry& entry);
nlohmann::json to_json(const ConjectureFinding& finding);
nlohmann::json to_json(const BicliqueFamily& family, const Graph& kb);
nlohmann::json to_json(const BicliqueDistanceReport& report, int witness_count);

/// Inverse of to_json(CatalogueEntry); throws std::invalid_argument on schema
/// mismatch and ParseError on bad graph6 fields.
CatalogueEntry catalogue_entry_from_json(const nlohmann::json& j);

}  // namespace biclab
