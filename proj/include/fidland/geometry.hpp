#pragma once

#include <string>
#include <utility>

namespace fidland {

// Optical model of one camera stream. The effective focal length is
// zoom * base_focal_length_mm; field of view follows the pinhole relation
// fov = 2 * arctan(sensor_dim / (2 * f)).
struct CameraModel {
    std::string name;
    double sensor_width_mm = 0.0;
    double sensor_height_mm = 0.0;
    double base_focal_length_mm = 0.0;
    double zoom_min = 1.0;
    double zoom_max = 1.0;
    int stream_width_px = 0;
    int stream_height_px = 0;
};

// Throws std::invalid_argument when dimensions/focal length are not positive
// or the zoom range is not 1 <= zoom_min <= zoom_max.
void validate_camera(const CameraModel& cam);

// Gimbal attitude relative to the drone body. pan: [-180, 180), clockwise
// positive viewed from above, 0 = forward. tilt: 0 = horizontal, -90 =
// straight down; limits are carried by the rig.
struct GimbalState {
    double pan_deg = 0.0;
    double tilt_deg = 0.0;
};

// One detected marker position in stream pixels. (u_c, v_c) is the principal
// point; the frame spans [0, 2*u_c] x [0, 2*v_c]. s_p_frac is the marker side
// length as a fraction of the frame width, in (0, 1].
struct PixelObservation {
    double u = 0.0;
    double v = 0.0;
    double u_c = 0.0;
    double v_c = 0.0;
    double s_p_frac = 0.0;
};

// Composed pointing solution for the landing pad, all in degrees.
// phi: pan offset from drone heading to the pad line of sight.
// theta: tilt of the line of sight (0 horizontal, -90 straight down).
// psi: pad yaw relative to drone yaw.
struct TargetAngles {
    double phi_deg = 0.0;
    double theta_deg = 0.0;
    double psi_deg = 0.0;
};

enum class Axis { Horizontal, Vertical };

// Field of view in degrees at the given zoom factor.
// Throws std::out_of_range when zoom lies outside the camera's zoom range.
double fov_deg(const CameraModel& cam, double zoom, Axis axis);

// Pixel offsets -> angular offsets (phi_u, theta_v) in degrees.
// phi_u = ((u - u_c) / (2*u_c)) * fov_u. A rightward pixel offset gives
// positive phi_u; a downward pixel offset (v > v_c) gives negative theta_v.
std::pair<double, double> pixel_offset_angles(const PixelObservation& obs,
                                              double fov_u_deg,
                                              double fov_v_deg);

// Gimbal attitude + pixel offsets -> line-of-sight angles. phi wraps to
// [-180, 180); theta is left unwrapped (tilt travel is small).
TargetAngles compose_target_angles(const GimbalState& gimbal,
                                   double phi_u_deg, double theta_v_deg);

// Pad yaw relative to drone yaw, wrapped to [-180, 180).
double relative_yaw(double drone_yaw_deg, double pad_yaw_deg);

} // namespace fidland
