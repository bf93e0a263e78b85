#pragma once

#include <string>

#include <json.hpp>

namespace cnsparse {

/// Serialize with every floating-point value formatted at 12 significant
/// digits ("%.12g"), so reports diff cleanly across runs and platforms.
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace cnsparse
