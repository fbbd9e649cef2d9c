#pragma once

// JSON, DOT and text renderings of analysis results. Every JSON document
// carries "schema_version".

#include <json.hpp>
#include <string>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/chunk.hpp"
#include "nsd/prism.hpp"

namespace nsd {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

nlohmann::ordered_json scheme_json(const SignedScheme& scheme);

nlohmann::ordered_json chunk_json(const ChunkDecomposition& chunk);
/// Two DOT graphs: the face pairing and the edge-class incidence.
std::string chunk_dot(const ChunkDecomposition& chunk);

nlohmann::ordered_json verdict_json(const Verdict& v, const Ambient& ambient);
std::string verdict_text(const Verdict& v, const Ambient& ambient);

nlohmann::ordered_json slopes_json(const ExceptionalSlopes& slopes);
nlohmann::ordered_json volume_json(const VolumeBound& bound);
nlohmann::ordered_json census_json(const std::vector<CensusEntry>& entries, const CensusOptions& options);

}  // namespace nsd
