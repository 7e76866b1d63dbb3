#pragma once

#include <nlohmann/json.hpp>

#include "fran/scheme.hpp"

namespace fran {

/// Document with top-level keys "config", "placement", "fronthaul", "schedule".
/// Packets are [file, part, piece] triples; every index is 0-based.
nlohmann::json scheme_to_json(const SynthesizedScheme& scheme);

/// Inverse of scheme_to_json. Throws ConfigError on malformed documents.
/// The result is not validated; run validate() on it.
SynthesizedScheme scheme_from_json(const nlohmann::json& doc);

nlohmann::json config_to_json(const SystemConfig& cfg);
SystemConfig config_from_json(const nlohmann::json& doc);

}  // namespace fran
