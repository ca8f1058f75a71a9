#pragma once

#include <filesystem>
#include <string>

#include "swarmtrust/errors.hpp"
#include "swarmtrust/harness.hpp"

namespace swarmtrust {

/// Parses a scenario from flat JSON text. Keys mirror the Scenario fields;
/// unknown keys are rejected with a ConfigError naming the key. Omitted keys
/// keep their defaults; the target is pinned to the region center.
Scenario scenario_from_json_text(const std::string& text);

/// Loads a scenario config file. Throws ConfigError when the file cannot be
/// read or its content is malformed.
Scenario load_scenario(const std::filesystem::path& path);

/// Serializes a scenario back to its flat JSON form (useful for writing
/// example configs).
std::string scenario_to_json_text(const Scenario& scenario);

}  // namespace swarmtrust
