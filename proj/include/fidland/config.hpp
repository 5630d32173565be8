#pragma once

#include <string>

#include <json.hpp>

#include "fidland/controller.hpp"
#include "fidland/sensing.hpp"
#include "fidland/world.hpp"

namespace fidland {

// Everything tunable in one place: rig optics, airframe response, detection
// gates and the controller policy. Scenario files and the config file
// (FIDLAND_CONFIG) override individual fields.
struct SimConfig {
    CameraRig rig;
    WorldParams world;
    SensingParams sensing;
    ControllerConfig controller;
};

SimConfig default_config();

// Overlay a JSON override object onto cfg. Unknown keys are rejected with
// the offending path in the exception message.
void apply_config_json(SimConfig& cfg, const nlohmann::json& j,
                       const std::string& context);

// default_config() plus the file named by FIDLAND_CONFIG, when set.
SimConfig config_from_env();

SimConfig load_config_file(const std::string& path);

// Rejects object keys outside `allowed`; context prefixes the error.
void check_allowed_keys(const nlohmann::json& obj,
                        std::initializer_list<const char*> allowed,
                        const std::string& context);

} // namespace fidland
