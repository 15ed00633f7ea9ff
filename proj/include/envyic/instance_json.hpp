#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "envyic/types.hpp"

namespace envyic {

// Instance files look like
//   { "values": ["10", "8"], "bids": ["10", "8"],
//     "curves": [["1", "0.5"], ["0.9", "0.81"]], "quantum": "0.01" }
// Amounts are decimal (or "p/q") strings so they round-trip exactly; plain JSON
// numbers are accepted on input. A single entry in "curves" (or a "curve" key)
// is shared by every bidder. "bids" defaults to "values".

nlohmann::json money_to_json(const Money& value);
Money money_from_json(const nlohmann::json& node);

nlohmann::json to_json(const AdTypesInstance& instance);
AdTypesInstance ad_types_from_json(const nlohmann::json& node);

AdTypesInstance load_instance(const std::filesystem::path& path);

/// True when every bidder carries the same curve (a position auction).
bool has_common_curve(const AdTypesInstance& instance);
/// Throws InvalidInstance unless has_common_curve.
PositionInstance to_position(const AdTypesInstance& instance);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace envyic
