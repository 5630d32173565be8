#include "fidland/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fidland/angles.hpp"

namespace fidland {

const char* to_string(PadType t) {
    switch (t) {
        case PadType::Visual: return "visual";
        case PadType::ActiveIr: return "active_ir";
        case PadType::PassiveIr: return "passive_ir";
    }
    return "?";
}

const char* to_string(StreamId s) {
    switch (s) {
        case StreamId::Wide: return "wide";
        case StreamId::Zoom: return "zoom";
        case StreamId::Ir: return "ir";
    }
    return "?";
}

void validate_pad(const PadState& pad) {
    if (pad.marker_sizes_m.empty())
        throw std::invalid_argument("pad: marker_sizes_m must not be empty");
    double prev = 0.0;
    bool first = true;
    for (double s : pad.marker_sizes_m) {
        if (!(s > 0.0))
            throw std::invalid_argument("pad: marker sizes must be positive");
        if (!first && !(s < prev))
            throw std::invalid_argument("pad: marker sizes must be strictly decreasing");
        prev = s;
        first = false;
    }
    if ((pad.type == PadType::ActiveIr || pad.type == PadType::PassiveIr) &&
        pad.marker_sizes_m.size() != 1)
        throw std::invalid_argument("pad: infrared pads carry a single marker");
}

CommandSet saturate(const CommandSet& cmd) {
    const bool ok = std::isfinite(cmd.forward_mps) && std::isfinite(cmd.right_mps) &&
                    std::isfinite(cmd.up_mps) && std::isfinite(cmd.yaw_rate_dps) &&
                    std::isfinite(cmd.gimbal.pan_dps) && std::isfinite(cmd.gimbal.tilt_dps) &&
                    std::isfinite(cmd.gimbal.pan_target_deg) &&
                    std::isfinite(cmd.gimbal.tilt_target_deg) &&
                    std::isfinite(cmd.zoom.target);
    if (!ok) throw std::invalid_argument("saturate: non-finite command field");

    CommandSet out = cmd;
    const CommandLimits& lim = kCommandLimits;
    out.forward_mps = clamp(cmd.forward_mps, lim.forward_min, lim.forward_max);
    out.right_mps = clamp(cmd.right_mps, lim.right_min, lim.right_max);
    out.up_mps = clamp(cmd.up_mps, lim.up_min, lim.up_max);
    out.yaw_rate_dps = clamp(cmd.yaw_rate_dps, lim.yaw_rate_min, lim.yaw_rate_max);
    return out;
}

Vec3 camera_position(const DroneState& drone, const Vec3& mount_offset_m) {
    const Vec3 h = heading_vec(drone.yaw_deg);
    const Vec3 r = right_vec(drone.yaw_deg);
    return drone.position + r * mount_offset_m.x + h * mount_offset_m.y +
           Vec3{0.0, 0.0, mount_offset_m.z};
}

namespace {

void apply_stream_and_zoom(WorldState& w, const CommandSet& cmd, double dt,
                           const CameraRig& rig, const WorldParams& p) {
    if (cmd.stream != StreamCommand::Keep) {
        StreamId target = StreamId::Zoom;
        if (cmd.stream == StreamCommand::Wide) target = StreamId::Wide;
        else if (cmd.stream == StreamCommand::Ir) target = StreamId::Ir;
        if (target != w.active_camera) {
            w.active_camera = target;
            const CameraModel& cam = rig.camera(target);
            // a stream change is a discrete camera swap: zoom lands directly
            // on the commanded (or nearest valid) factor for the new camera
            const double want = cmd.zoom.mode == ZoomCommand::Mode::Set ? cmd.zoom.target : cam.zoom_min;
            w.zoom = clamp(want, cam.zoom_min, cam.zoom_max);
            return;
        }
    }

    const CameraModel& cam = rig.camera(w.active_camera);
    const double grow = std::pow(p.zoom_slew_factor_per_s, dt);
    switch (cmd.zoom.mode) {
        case ZoomCommand::Mode::None:
            break;
        case ZoomCommand::Mode::Out:
            w.zoom = std::max(cam.zoom_min, w.zoom - p.zoom_out_rate_per_s * dt);
            break;
        case ZoomCommand::Mode::Auto:
            if (cmd.zoom.auto_direction > 0) w.zoom = std::min(cam.zoom_max, w.zoom * grow);
            else if (cmd.zoom.auto_direction < 0) w.zoom = std::max(cam.zoom_min, w.zoom / grow);
            break;
        case ZoomCommand::Mode::Set: {
            const double target = clamp(cmd.zoom.target, cam.zoom_min, cam.zoom_max);
            if (target > w.zoom) w.zoom = std::min(target, w.zoom * grow);
            else w.zoom = std::max(target, w.zoom / grow);
            break;
        }
    }
}

void apply_gimbal(WorldState& w, const GimbalCommand& g, double dt,
                  const CameraRig& rig, const WorldParams& p) {
    const double cap = p.gimbal_rate_max_dps;
    double pan_rate = 0.0;
    double tilt_rate = 0.0;
    if (g.mode == GimbalCommand::Mode::Rate) {
        pan_rate = clamp(g.pan_dps, -cap, cap);
        tilt_rate = clamp(g.tilt_dps, -cap, cap);
    } else {
        // move toward the targets at the rate cap, shortest way for pan
        const double dpan = wrap_deg(g.pan_target_deg - w.gimbal.pan_deg);
        const double dtilt = g.tilt_target_deg - w.gimbal.tilt_deg;
        pan_rate = clamp(dpan / dt, -cap, cap);
        tilt_rate = clamp(dtilt / dt, -cap, cap);
    }
    w.gimbal.pan_deg = wrap_deg(w.gimbal.pan_deg + pan_rate * dt);
    w.gimbal.tilt_deg = clamp(w.gimbal.tilt_deg + tilt_rate * dt,
                              rig.tilt_min_deg, rig.tilt_max_deg);
}

} // namespace

WorldState step(const WorldState& world, const CommandSet& cmd, double dt,
                const CameraRig& rig, const WorldParams& params) {
    if (!(dt > 0.0) || dt > 0.25 || !std::isfinite(dt))
        throw std::invalid_argument("step: dt must lie in (0, 0.25]");

    WorldState w = world;
    apply_stream_and_zoom(w, cmd, dt, rig, params);
    apply_gimbal(w, cmd.gimbal, dt, rig, params);

    if (w.drone.motors_on) {
        w.drone.yaw_deg = wrap_deg(w.drone.yaw_deg + cmd.yaw_rate_dps * dt);

        const Vec3 cmd_world = heading_vec(w.drone.yaw_deg) * cmd.forward_mps +
                               right_vec(w.drone.yaw_deg) * cmd.right_mps +
                               Vec3{0.0, 0.0, cmd.up_mps};
        const double blend = std::min(1.0, dt / params.velocity_tau_s);
        w.drone.velocity += (cmd_world - w.drone.velocity) * blend;

        Vec3 v_eff = w.drone.velocity;
        for (const WindGust& g : w.gusts)
            if (world.t >= g.t_start_s && world.t < g.t_end_s) v_eff += g.velocity_mps;

        w.drone.position += v_eff * dt;
        // ground contact kills all motion for the tick; a later climb
        // command can still lift off again
        if (w.drone.position.z <= 0.0 && v_eff.z < 0.0) {
            w.drone.position.z = 0.0;
            w.drone.velocity = {};
            w.touchdown = true;
        }
    }

    // the flight controller honors a motor stop only on the ground
    if (cmd.motor_stop && w.touchdown && w.drone.position.z <= 1e-9)
        w.drone.motors_on = false;

    w.t = world.t + dt;
    return w;
}

double touchdown_error(const WorldState& world, const Vec3& mount_offset_m) {
    if (!world.touchdown)
        throw std::logic_error("touchdown_error: drone has not touched down");
    const Vec3 cam = camera_position(world.drone, mount_offset_m);
    const Vec3 d = cam - world.pad.position;
    return std::hypot(d.x, d.y);
}

} // namespace fidland
