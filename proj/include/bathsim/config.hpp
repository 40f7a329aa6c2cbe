#pragma once

#include <string>

#include "bathsim/scenarios.hpp"

namespace bathsim {

// Strict JSON config parsing: unknown keys are errors, messages carry the
// field path. Temperatures are converted to Celsius at this boundary when
// the config declares "units": "F".
ScenarioSpec parse_config(const std::string& json_text);
ScenarioSpec parse_config_file(const std::string& path);

// Canonical serialization in the spec's own I/O units; for Celsius configs
// parse(serialize(parse(x))) == parse(x) bit-exactly.
std::string serialize_config(const ScenarioSpec& spec);

} // namespace bathsim
