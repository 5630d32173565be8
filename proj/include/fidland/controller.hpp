#pragma once

#include <optional>
#include <utility>

#include "fidland/world.hpp"

namespace fidland {

enum class StateId {
    StaticSearch,
    SearchDown,
    SearchUp,
    AimCamera,
    AimDrone,
    Approach,
    YawAlign,
    HorizontalAlignment,
    Descent,
    Commit,
    Landed,
    ZoomOut1,
    ZoomOut2,
    Ascent,
};

const char* to_string(StateId s);

// Everything the policy may see about the pad for one tick, already composed
// into angles. phi/theta: line of sight relative to drone heading/horizon.
// psi: pad yaw relative to drone yaw. phi_u/theta_v: raw pixel offsets.
struct DetectionSignals {
    double phi_deg = 0.0;
    double theta_deg = 0.0;
    double psi_deg = 0.0;
    double s_p_percent = 0.0;
    double phi_u_deg = 0.0;
    double theta_v_deg = 0.0;
};

// Full input surface of the policy. Altitude and range are deliberately
// absent: the policy flies on image angles and marker pixel size alone.
struct ControllerInput {
    std::optional<DetectionSignals> detection;
    GimbalState gimbal;
    double zoom = 1.0;
    StreamId active_stream = StreamId::Zoom;
    bool motor_stopped = false;
    double dt_s = 0.05;
};

struct ControllerConfig {
    // entry/exit thresholds, degrees
    double theta_c_deg = 3.0;  // camera aimed: pixel offsets within this
    double theta_d_deg = 3.0;  // drone aimed: |phi| within this
    double theta_a_deg = 3.0;  // above pad: theta within this of straight down
    double theta_y_deg = 1.0;  // yaw aligned: |psi| within this
    double theta_h_deg = 2.0;  // centered: off-nadir angle within this

    // descent commit gate
    double zoom_commit_max = 2.0;        // zoom factor at or below
    double s_commit_min_percent = 32.0;  // marker width fraction at or above

    // automatic zoom band, percent of frame width
    double band_low_percent = 20.0;
    double band_high_percent = 80.0;
    double zoom_frame_margin = 0.7; // skip zoom-in when the marker sits
                                    // beyond this fraction of the half-fov

    // search pattern: the body yaws continuously while the gimbal runs
    // tilt legs between the band edges, cycling static stare, down leg,
    // up leg, static stare. The tilt rate is capped so the camera climbs
    // at most search_coverage_factor of the vertical fov per revolution;
    // the resulting helix leaves no azimuth gap at any elevation inside
    // the band. Legs end on reaching a band edge, and the stare holds the
    // gimbal still so the turnaround dwells there.
    double search_yaw_rate_dps = 10.0;
    double search_tilt_rate_dps = 7.0;
    double search_coverage_factor = 0.9;
    double static_tilt_deg = -45.0;
    double search_tilt_down_deg = -88.0;
    double search_tilt_up_deg = -2.0;
    double static_search_duration_s = 2.0;

    // recovery timeouts
    double zoomout1_timeout_s = 6.0;
    double zoomout2_timeout_s = 5.0;
    double ascent_timeout_s = 10.0;

    // gains
    double k_gimbal_per_s = 0.8;       // gimbal rate per degree of pixel offset
    double k_yaw_per_s = 0.8;          // yaw rate per degree
    double approach_speed_mps = 2.0;   // forward = speed * cos(theta)
    double k_right_mps_per_deg = 0.05; // lateral correction during approach
    double k_nadir_p = 0.05;           // m/s per degree off nadir
    double k_nadir_d = 0.15;           // m/s per degree/s off nadir

    // vertical speeds
    double descent_speed_mps = 0.5;
    double commit_speed_mps = 0.3;
    double ascent_speed_mps = 0.5;

    // misc
    double aim_snap_deg = 5.0;        // aim with angle targets beyond this
    double gimbal_down_tol_deg = 1.0; // gimbal counts as straight down within
    double ascent_pan_sweep_dps = 45.0;
};

// Policy state between ticks. resume_target is set exactly while the state
// is ZoomOut1 and names the state to return to on re-detection. The nadir
// memo backs the derivative term of the straight-down translation law.
struct Controller {
    StateId state = StateId::StaticSearch;
    double state_elapsed_s = 0.0;
    std::optional<StateId> resume_target;
    bool have_nadir_memo = false;
    double nadir_f_deg = 0.0;
    double nadir_r_deg = 0.0;
};

// Forward/right decomposition of the off-nadir angle (degrees): how far the
// pad sits from straight below, resolved along the drone body axes.
std::pair<double, double> nadir_components_deg(const DetectionSignals& det);

// Next state for the current tick. Pure; reads the elapsed-in-state timer.
StateId transition(const Controller& c, const ControllerInput& in,
                   const ControllerConfig& cfg);

// Velocity, yaw and gimbal commands for the controller's current state.
// Zoom and stream fields are left untouched; zoom_policy fills them.
// The rig is consulted for the fov-matched search tilt rate.
CommandSet control_signals(const Controller& c, const ControllerInput& in,
                           const ControllerConfig& cfg, const CameraRig& rig);

// Zoom/stream directive for the current state. Auto mode nudges the zoom
// factor to keep the marker width inside the configured band and hands off
// between the wide and zoom cameras at the range ends; recovery states zoom
// out; zoom commands are suppressed entirely on the IR stream.
void zoom_policy(StateId state, const std::optional<DetectionSignals>& det,
                 double zoom, StreamId stream, const ControllerConfig& cfg,
                 const CameraRig& rig, ZoomCommand& zoom_cmd,
                 StreamCommand& stream_cmd);

// One control cycle: transition, then signals and zoom for the new state.
// Deterministic in (controller, input).
std::pair<Controller, CommandSet> tick(const Controller& c,
                                       const ControllerInput& in,
                                       const ControllerConfig& cfg,
                                       const CameraRig& rig);

} // namespace fidland
