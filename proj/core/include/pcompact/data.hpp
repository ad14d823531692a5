#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pcompact {

// Data files compiled into the library (core/data/*.json).
std::string_view embedded_file(std::string_view name);
std::vector<std::string> embedded_file_names();

// Parsed once, then shared read-only.
const nlohmann::json& data_json(std::string_view name);

}  // namespace pcompact
