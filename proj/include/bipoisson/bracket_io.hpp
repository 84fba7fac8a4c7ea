#pragma once

#include <filesystem>

#include <json.hpp>

#include "bipoisson/brackets.hpp"

namespace bipoisson {

/// {"N", "lambda": "p/q" | null, "restricted", "entries": [{"u","v","poly"}]}
/// with u before v in coordinate order and zero entries omitted.
nlohmann::ordered_json table_to_json(const BracketTable& t);
/// Throws ParseError on malformed documents, unknown or out-of-set
/// coordinates, u == v with a nonzero entry, or a pair listed twice.
BracketTable table_from_json(const nlohmann::json& j);
BracketTable load_table(const std::filesystem::path& path);

}  // namespace bipoisson
