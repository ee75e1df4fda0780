#pragma once

#include "kzero/rep_ring.hpp"

#include <json.hpp>

#include <string>

namespace kzero {

/// Character table document:
///   {"group": {"name", "order", "exponent", "classes": [{"label", "size"}], "power_map": [[...]]},
///    "table": {"degrees": [...], "names": [...], "rows": [[[coeffs of length e], ...], ...]}}
/// "names" is optional. Only exact integers are accepted.
nlohmann::json table_to_json(const CharacterTable& table);
TablePtr table_from_json(const nlohmann::json& doc);

/// Catalog identifier or path to a table document.
TablePtr load_table(const std::string& source);
TablePtr load_table_file(const std::string& path);

}  // namespace kzero
