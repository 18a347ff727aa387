#pragma once

#include "geomove/types.hpp"

#include <json.hpp>

namespace geomove {

nlohmann::json to_json(const GazetteerEntry& e);
GazetteerEntry gazetteer_entry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PlaceMention& m);
PlaceMention place_mention_from_json(const nlohmann::json& j);

/// Full statement record as kept in the statement store. Tokens are not
/// stored; they are recomputed from the text on load.
nlohmann::json to_json(const Statement& s);
Statement statement_from_json(const nlohmann::json& j);

}  // namespace geomove
