#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fidland/geometry.hpp"
#include "fidland/types.hpp"

namespace fidland {

// World frame: x east, y north, z up, z = 0 on the pad base plane.
// Yaw angles are compass style: 0 = +y, clockwise positive from above.

enum class PadType { Visual, ActiveIr, PassiveIr };
enum class StreamId { Wide, Zoom, Ir };

const char* to_string(PadType t);
const char* to_string(StreamId s);

struct DroneState {
    Vec3 position;            // m
    double yaw_deg = 0.0;
    Vec3 velocity;            // m/s, world frame
    bool motors_on = true;
};

struct PadState {
    Vec3 position;            // marker center, on the ground plane
    double yaw_deg = 0.0;
    PadType type = PadType::Visual;
    std::vector<double> marker_sizes_m; // strictly decreasing side lengths
};

void validate_pad(const PadState& pad);

struct GimbalCommand {
    enum class Mode { Rate, Angle };
    Mode mode = Mode::Rate;
    double pan_dps = 0.0;     // Rate mode
    double tilt_dps = 0.0;
    double pan_target_deg = 0.0;   // Angle mode; slews at the gimbal rate cap
    double tilt_target_deg = 0.0;
};

struct ZoomCommand {
    enum class Mode { None, Out, Auto, Set };
    Mode mode = Mode::None;
    int auto_direction = 0;   // Auto: -1 widen, +1 tighten, 0 hold
    double target = 1.0;      // Set: absolute zoom factor
};

enum class StreamCommand { Keep, Wide, Zoom, Ir };

struct CommandSet {
    double forward_mps = 0.0; // body frame, + ahead
    double right_mps = 0.0;   // body frame, + starboard
    double up_mps = 0.0;      // + climb
    double yaw_rate_dps = 0.0; // + clockwise from above
    GimbalCommand gimbal;
    ZoomCommand zoom;
    StreamCommand stream = StreamCommand::Keep;
    bool motor_stop = false;
};

// Airframe velocity envelope, m/s and deg/s.
struct CommandLimits {
    double forward_min = -0.5, forward_max = 2.0;
    double right_min = -1.0, right_max = 1.0;
    double up_min = -0.5, up_max = 1.0;
    double yaw_rate_min = -10.0, yaw_rate_max = 10.0;
};
inline constexpr CommandLimits kCommandLimits{};

struct WindGust {
    double t_start_s = 0.0;   // must be < t_end_s
    double t_end_s = 0.0;
    Vec3 velocity_mps;        // added to drone velocity while active
};

struct WorldState {
    double t = 0.0;
    DroneState drone;
    GimbalState gimbal;
    PadState pad;
    StreamId active_camera = StreamId::Zoom;
    double zoom = 1.0;
    std::vector<WindGust> gusts;
    std::uint64_t rng_seed = 0;
    bool touchdown = false;
};

// Cameras available to the simulated airframe plus gimbal travel and the
// camera's body-frame mounting offset.
struct CameraRig {
    CameraModel wide;
    CameraModel zoom;
    CameraModel ir;
    double tilt_min_deg = -120.0;
    double tilt_max_deg = 30.0;
    Vec3 mount_offset_m;      // body frame: x right, y forward, z up

    const CameraModel& camera(StreamId id) const {
        switch (id) {
            case StreamId::Wide: return wide;
            case StreamId::Ir: return ir;
            default: return zoom;
        }
    }
};

struct WorldParams {
    double velocity_tau_s = 0.5;     // first-order velocity tracking constant
    double gimbal_rate_max_dps = 60.0;
    double zoom_slew_factor_per_s = 1.5; // multiplicative zoom rate (Auto/Set)
    double zoom_out_rate_per_s = 0.5;    // linear decrease in Out mode
    double dt_s = 0.05;                  // nominal tick, 20 Hz
};

// Clamp velocity commands into kCommandLimits. Projection: saturated fields
// are replaced by the nearest bound, others pass through untouched (gimbal,
// zoom and stream fields are never modified). Idempotent.
// Throws std::invalid_argument when any numeric command field is non-finite.
CommandSet saturate(const CommandSet& cmd);

// Advance the world by one tick. Deterministic; pure in (world, cmd).
// cmd is expected to be saturated already. dt must lie in (0, 0.25].
WorldState step(const WorldState& world, const CommandSet& cmd, double dt,
                const CameraRig& rig, const WorldParams& params);

// Horizontal distance between the pad center and the ground projection of
// the camera. Requires world.touchdown; throws std::logic_error otherwise.
double touchdown_error(const WorldState& world, const Vec3& mount_offset_m = {});

// World position of the camera given the mount offset.
Vec3 camera_position(const DroneState& drone, const Vec3& mount_offset_m);

} // namespace fidland
