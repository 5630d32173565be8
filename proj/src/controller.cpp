#include "fidland/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fidland/angles.hpp"

namespace fidland {

const char* to_string(StateId s) {
    switch (s) {
        case StateId::StaticSearch: return "StaticSearch";
        case StateId::SearchDown: return "SearchDown";
        case StateId::SearchUp: return "SearchUp";
        case StateId::AimCamera: return "AimCamera";
        case StateId::AimDrone: return "AimDrone";
        case StateId::Approach: return "Approach";
        case StateId::YawAlign: return "YawAlign";
        case StateId::HorizontalAlignment: return "HorizontalAlignment";
        case StateId::Descent: return "Descent";
        case StateId::Commit: return "Commit";
        case StateId::Landed: return "Landed";
        case StateId::ZoomOut1: return "ZoomOut1";
        case StateId::ZoomOut2: return "ZoomOut2";
        case StateId::Ascent: return "Ascent";
    }
    return "?";
}

std::pair<double, double> nadir_components_deg(const DetectionSignals& det) {
    const double off_nadir = det.theta_deg + 90.0; // > 0 for a pad below the horizon
    return {off_nadir * std::cos(deg2rad(det.phi_deg)),
            off_nadir * std::sin(deg2rad(det.phi_deg))};
}

StateId transition(const Controller& c, const ControllerInput& in,
                   const ControllerConfig& cfg) {
    const bool det = in.detection.has_value();
    const DetectionSignals d = det ? *in.detection : DetectionSignals{};

    switch (c.state) {
        case StateId::StaticSearch:
            if (det) return StateId::AimCamera;
            if (c.state_elapsed_s >= cfg.static_search_duration_s) return StateId::SearchDown;
            return c.state;
        case StateId::SearchDown:
            if (det) return StateId::AimCamera;
            if (in.gimbal.tilt_deg <= cfg.search_tilt_down_deg + 0.01)
                return StateId::SearchUp;
            return c.state;
        case StateId::SearchUp:
            if (det) return StateId::AimCamera;
            if (in.gimbal.tilt_deg >= cfg.search_tilt_up_deg - 0.01)
                return StateId::StaticSearch;
            return c.state;

        case StateId::AimCamera:
            if (!det) return StateId::ZoomOut1;
            if (std::abs(d.phi_u_deg) < cfg.theta_c_deg &&
                std::abs(d.theta_v_deg) < cfg.theta_c_deg)
                return StateId::AimDrone;
            return c.state;
        case StateId::AimDrone:
            if (!det) return StateId::ZoomOut1;
            if (std::abs(d.phi_deg) < cfg.theta_d_deg) return StateId::Approach;
            return c.state;
        case StateId::Approach:
            if (!det) return StateId::ZoomOut1;
            if (d.theta_deg <= -(90.0 - cfg.theta_a_deg)) return StateId::YawAlign;
            return c.state;
        case StateId::YawAlign:
            if (!det) return StateId::ZoomOut1;
            if (std::abs(d.psi_deg) < cfg.theta_y_deg) return StateId::HorizontalAlignment;
            return c.state;
        case StateId::HorizontalAlignment:
            if (!det) return StateId::ZoomOut1;
            if (std::abs(d.theta_deg + 90.0) < cfg.theta_h_deg &&
                std::abs(in.gimbal.tilt_deg + 90.0) <= cfg.gimbal_down_tol_deg)
                return StateId::Descent;
            return c.state;
        case StateId::Descent:
            if (!det) return StateId::ZoomOut2;
            if (in.zoom <= cfg.zoom_commit_max && d.s_p_percent >= cfg.s_commit_min_percent)
                return StateId::Commit;
            return c.state;

        case StateId::Commit:
            // final blind segment: detections are ignored outright
            if (in.motor_stopped) return StateId::Landed;
            return c.state;
        case StateId::Landed:
            return c.state;

        case StateId::ZoomOut1:
            if (det) {
                if (!c.resume_target)
                    throw std::logic_error("ZoomOut1 without a resume target");
                return *c.resume_target;
            }
            if (c.state_elapsed_s >= cfg.zoomout1_timeout_s) return StateId::StaticSearch;
            return c.state;
        case StateId::ZoomOut2:
            if (det) return StateId::HorizontalAlignment;
            if (c.state_elapsed_s >= cfg.zoomout2_timeout_s) return StateId::Ascent;
            return c.state;
        case StateId::Ascent:
            if (det) return StateId::HorizontalAlignment;
            if (c.state_elapsed_s >= cfg.ascent_timeout_s) return StateId::StaticSearch;
            return c.state;
    }
    return c.state;
}

namespace {

// rate command that reaches `target` without overshoot, capped at `rate_cap`
double rate_to(double target, double current, double rate_cap, double dt) {
    return clamp((target - current) / dt, -rate_cap, rate_cap);
}

GimbalCommand hold_gimbal() {
    GimbalCommand g;
    g.mode = GimbalCommand::Mode::Rate;
    return g;
}

} // namespace

CommandSet control_signals(const Controller& c, const ControllerInput& in,
                           const ControllerConfig& cfg, const CameraRig& rig) {
    CommandSet cmd;
    cmd.gimbal = hold_gimbal();
    const bool det = in.detection.has_value();
    const DetectionSignals d = det ? *in.detection : DetectionSignals{};
    const double kg = cfg.k_gimbal_per_s;

    switch (c.state) {
        case StateId::StaticSearch: {
            // hold the camera still at its current tilt. Keeping the tilt in
            // place here means the pause between an up leg and the next down
            // leg dwells at the band edge, so elevations near the edge still
            // get a full revolution of azimuth sweep across the turnaround.
            cmd.gimbal.mode = GimbalCommand::Mode::Angle;
            cmd.gimbal.pan_target_deg = 0.0;
            cmd.gimbal.tilt_target_deg = in.gimbal.tilt_deg;
            break;
        }
        case StateId::SearchDown:
        case StateId::SearchUp: {
            cmd.yaw_rate_dps = cfg.search_yaw_rate_dps;
            const double tilt_target = c.state == StateId::SearchDown
                                           ? cfg.search_tilt_down_deg
                                           : cfg.search_tilt_up_deg;
            double tilt_rate = cfg.search_tilt_rate_dps;
            if (cfg.search_yaw_rate_dps > 0.0) {
                const double fov_v =
                    fov_deg(rig.camera(in.active_stream), in.zoom, Axis::Vertical);
                tilt_rate = std::min(tilt_rate, cfg.search_coverage_factor *
                                                    fov_v *
                                                    cfg.search_yaw_rate_dps / 360.0);
            }
            cmd.gimbal.pan_dps = rate_to(0.0, in.gimbal.pan_deg, 60.0, in.dt_s);
            cmd.gimbal.tilt_dps =
                rate_to(tilt_target, in.gimbal.tilt_deg, tilt_rate, in.dt_s);
            break;
        }
        case StateId::AimCamera: {
            if (!det) break;
            if (std::abs(d.phi_u_deg) > cfg.aim_snap_deg ||
                std::abs(d.theta_v_deg) > cfg.aim_snap_deg) {
                // first sight: swing the camera straight onto the marker
                cmd.gimbal.mode = GimbalCommand::Mode::Angle;
                cmd.gimbal.pan_target_deg = wrap_deg(in.gimbal.pan_deg + d.phi_u_deg);
                cmd.gimbal.tilt_target_deg = in.gimbal.tilt_deg + d.theta_v_deg;
            } else {
                cmd.gimbal.pan_dps = kg * d.phi_u_deg;
                cmd.gimbal.tilt_dps = kg * d.theta_v_deg;
            }
            break;
        }
        case StateId::AimDrone: {
            if (!det) break;
            cmd.yaw_rate_dps = clamp(cfg.k_yaw_per_s * d.phi_deg,
                                     kCommandLimits.yaw_rate_min,
                                     kCommandLimits.yaw_rate_max);
            // pan feedforward keeps the marker framed while the body turns
            cmd.gimbal.pan_dps = kg * d.phi_u_deg - cmd.yaw_rate_dps;
            cmd.gimbal.tilt_dps = kg * d.theta_v_deg;
            break;
        }
        case StateId::Approach: {
            if (!det) break;
            cmd.forward_mps = cfg.approach_speed_mps * std::cos(deg2rad(d.theta_deg));
            cmd.right_mps = cfg.k_right_mps_per_deg * d.phi_deg;
            // closing on the pad sinks the line of sight a few degrees per
            // second; a proportional rate lags enough to push the marker out
            // of a narrow frame, so track with an angle command instead
            cmd.gimbal.mode = GimbalCommand::Mode::Angle;
            cmd.gimbal.pan_target_deg = wrap_deg(in.gimbal.pan_deg + d.phi_u_deg);
            cmd.gimbal.tilt_target_deg = in.gimbal.tilt_deg + d.theta_v_deg;
            break;
        }
        case StateId::YawAlign: {
            if (!det) break;
            cmd.yaw_rate_dps = clamp(cfg.k_yaw_per_s * d.psi_deg,
                                     kCommandLimits.yaw_rate_min,
                                     kCommandLimits.yaw_rate_max);
            cmd.gimbal.mode = GimbalCommand::Mode::Angle;
            cmd.gimbal.pan_target_deg = wrap_deg(in.gimbal.pan_deg + d.phi_u_deg);
            cmd.gimbal.tilt_target_deg = -90.0;
            break;
        }
        case StateId::HorizontalAlignment:
        case StateId::Descent: {
            if (!det) break;
            const auto [a_f, a_r] = nadir_components_deg(d);
            double v_f = cfg.k_nadir_p * a_f;
            double v_r = cfg.k_nadir_p * a_r;
            if (c.have_nadir_memo) {
                v_f += cfg.k_nadir_d * (a_f - c.nadir_f_deg) / in.dt_s;
                v_r += cfg.k_nadir_d * (a_r - c.nadir_r_deg) / in.dt_s;
            }
            cmd.forward_mps = v_f;
            cmd.right_mps = v_r;
            if (c.state == StateId::Descent) cmd.up_mps = -cfg.descent_speed_mps;
            // near straight down the pad's pan offset swings quickly as the
            // drone trims across it, so chase it with an angle command (full
            // gimbal slew) rather than the gentle aiming rate
            cmd.gimbal.mode = GimbalCommand::Mode::Angle;
            cmd.gimbal.pan_target_deg = wrap_deg(in.gimbal.pan_deg + d.phi_u_deg);
            cmd.gimbal.tilt_target_deg = -90.0;
            break;
        }
        case StateId::Commit: {
            cmd.up_mps = -cfg.commit_speed_mps;
            cmd.motor_stop = true; // honored by the airframe once grounded
            break;
        }
        case StateId::Ascent: {
            cmd.up_mps = cfg.ascent_speed_mps;
            cmd.gimbal.pan_dps = cfg.ascent_pan_sweep_dps;
            cmd.gimbal.tilt_dps = rate_to(-90.0, in.gimbal.tilt_deg, 60.0, in.dt_s);
            break;
        }
        case StateId::ZoomOut1:
        case StateId::ZoomOut2:
        case StateId::Landed:
            break; // hold everything
    }
    return cmd;
}

void zoom_policy(StateId state, const std::optional<DetectionSignals>& det,
                 double zoom, StreamId stream, const ControllerConfig& cfg,
                 const CameraRig& rig, ZoomCommand& zoom_cmd,
                 StreamCommand& stream_cmd) {
    zoom_cmd = ZoomCommand{};
    stream_cmd = StreamCommand::Keep;
    if (stream == StreamId::Ir) return; // the IR stream has no zoom

    const bool out_mode = state == StateId::ZoomOut1 || state == StateId::ZoomOut2;
    const bool auto_mode =
        state == StateId::AimCamera || state == StateId::AimDrone ||
        state == StateId::Approach || state == StateId::YawAlign ||
        state == StateId::HorizontalAlignment || state == StateId::Descent;

    if (out_mode) {
        if (stream == StreamId::Zoom && zoom <= rig.zoom.zoom_min + 1e-9) {
            // widening past the zoom camera's floor: hand off to the wide stream
            stream_cmd = StreamCommand::Wide;
            zoom_cmd.mode = ZoomCommand::Mode::Set;
            zoom_cmd.target = rig.wide.zoom_min;
        } else if (stream == StreamId::Zoom) {
            zoom_cmd.mode = ZoomCommand::Mode::Out;
        }
        return;
    }

    if (!auto_mode || !det) return;
    const double s_p = det->s_p_percent;

    // a square marker fills the shorter sensor axis first: its height tops
    // out when the width fraction reaches h/w. Widen before that point, not
    // just at the band ceiling, or the detector drops the marker while the
    // reported width still looks comfortable
    const CameraModel& cam = rig.camera(stream);
    const double fit_limit =
        90.0 * cam.sensor_height_mm / cam.sensor_width_mm;

    if (s_p > std::min(cfg.band_high_percent, fit_limit)) {
        if (stream == StreamId::Zoom && zoom <= rig.zoom.zoom_min + 1e-9) {
            stream_cmd = StreamCommand::Wide;
            zoom_cmd.mode = ZoomCommand::Mode::Set;
            zoom_cmd.target = rig.wide.zoom_min;
        } else if (stream == StreamId::Zoom) {
            zoom_cmd.mode = ZoomCommand::Mode::Auto;
            zoom_cmd.auto_direction = -1;
        }
        return;
    }

    if (s_p < cfg.band_low_percent) {
        // tightening is allowed only while the marker sits comfortably
        // inside the frame; zooming must never push it out
        if (stream == StreamId::Zoom && zoom < rig.zoom.zoom_max - 1e-9) {
            const double half_u = fov_deg(rig.zoom, zoom, Axis::Horizontal) / 2.0;
            const double half_v = fov_deg(rig.zoom, zoom, Axis::Vertical) / 2.0;
            if (std::abs(det->phi_u_deg) <= cfg.zoom_frame_margin * half_u &&
                std::abs(det->theta_v_deg) <= cfg.zoom_frame_margin * half_v) {
                zoom_cmd.mode = ZoomCommand::Mode::Auto;
                zoom_cmd.auto_direction = 1;
            }
        } else if (stream == StreamId::Wide) {
            const double z_lo = rig.zoom.zoom_min;
            const double half_u = fov_deg(rig.zoom, z_lo, Axis::Horizontal) / 2.0;
            const double half_v = fov_deg(rig.zoom, z_lo, Axis::Vertical) / 2.0;
            if (std::abs(det->phi_u_deg) <= cfg.zoom_frame_margin * half_u &&
                std::abs(det->theta_v_deg) <= cfg.zoom_frame_margin * half_v) {
                stream_cmd = StreamCommand::Zoom;
                zoom_cmd.mode = ZoomCommand::Mode::Set;
                zoom_cmd.target = z_lo;
            }
        }
    }
}

std::pair<Controller, CommandSet> tick(const Controller& c,
                                       const ControllerInput& in,
                                       const ControllerConfig& cfg,
                                       const CameraRig& rig) {
    const StateId next = transition(c, in, cfg);

    Controller nc;
    nc.state = next;
    nc.state_elapsed_s = next == c.state ? c.state_elapsed_s + in.dt_s : 0.0;
    if (next == StateId::ZoomOut1)
        nc.resume_target = c.state == StateId::ZoomOut1 ? c.resume_target : c.state;

    const bool nadir_state =
        next == StateId::HorizontalAlignment || next == StateId::Descent;
    const bool was_nadir_state =
        c.state == StateId::HorizontalAlignment || c.state == StateId::Descent;
    if (nadir_state && was_nadir_state && c.have_nadir_memo) {
        nc.have_nadir_memo = true;
        nc.nadir_f_deg = c.nadir_f_deg;
        nc.nadir_r_deg = c.nadir_r_deg;
    }

    CommandSet cmd = control_signals(nc, in, cfg, rig);
    zoom_policy(next, in.detection, in.zoom, in.active_stream, cfg, rig,
                cmd.zoom, cmd.stream);

    if (nadir_state && in.detection) {
        const auto [a_f, a_r] = nadir_components_deg(*in.detection);
        nc.have_nadir_memo = true;
        nc.nadir_f_deg = a_f;
        nc.nadir_r_deg = a_r;
    } else if (!nadir_state) {
        nc.have_nadir_memo = false;
    }

    return {nc, cmd};
}

} // namespace fidland
