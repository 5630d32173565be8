#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fidland/config.hpp"
#include "fidland/sensing.hpp"
#include "fidland/world.hpp"

namespace fidland {

// One landing trial: pad on the ground at the origin, drone parked at a
// compass bearing / horizontal distance / altitude from it. Obscuration
// windows hide the pad from every camera while active; wind gusts push the
// airframe. Loaded from JSON (schema_version 1).
struct Scenario {
    std::string name = "scenario";
    PadType pad_type = PadType::Visual;
    double pad_yaw_deg = 0.0;
    std::vector<double> marker_sizes_m; // empty: per-type default

    double start_distance_m = 30.0;
    double start_bearing_deg = 0.0; // compass bearing pad -> drone
    double start_altitude_m = 20.0;
    double drone_yaw_deg = 0.0;

    std::optional<double> initial_zoom;      // empty: auto
    std::optional<StreamId> initial_stream;  // empty: by pad type

    std::vector<ObscurationEvent> obscurations;
    std::vector<WindGust> gusts;

    double max_sim_time_s = 900.0;
    std::uint64_t seed = 0;

    SimConfig config; // base plus any inline overrides
};

// Marker stack used when a scenario names none: concentric squares for a
// visual pad, a single beacon for the IR pads.
std::vector<double> default_marker_sizes(PadType type);

// Stream the policy should start on for this pad type.
StreamId default_stream(PadType type);

// Starting zoom factor when the scenario leaves it automatic: enough zoom
// for the largest marker to clear the detection floor with margin, clamped
// into the camera's range.
double auto_initial_zoom(const Scenario& sc, const CameraModel& cam,
                         const SensingParams& sensing);

// Parse scenario JSON. `origin` labels errors (file name); `base` seeds the
// config before inline overrides. Unknown keys and out-of-range values are
// rejected with the offending field named.
Scenario parse_scenario(const std::string& text, const std::string& origin,
                        const SimConfig& base);

Scenario load_scenario_file(const std::string& path, const SimConfig& base);

// Initial world for the scenario (gimbal level at pan 0, tilt parked for
// the static stare; motors on; zoom/stream resolved).
WorldState initial_world(const Scenario& sc);

} // namespace fidland
