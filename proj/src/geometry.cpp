#include "fidland/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "fidland/angles.hpp"

namespace fidland {

void validate_camera(const CameraModel& cam) {
    if (!(cam.sensor_width_mm > 0.0) || !(cam.sensor_height_mm > 0.0))
        throw std::invalid_argument("camera '" + cam.name + "': sensor dimensions must be positive");
    if (!(cam.base_focal_length_mm > 0.0))
        throw std::invalid_argument("camera '" + cam.name + "': base focal length must be positive");
    if (!(cam.zoom_min >= 1.0) || !(cam.zoom_max >= cam.zoom_min))
        throw std::invalid_argument("camera '" + cam.name + "': zoom range must satisfy 1 <= min <= max");
    if (cam.stream_width_px <= 0 || cam.stream_height_px <= 0)
        throw std::invalid_argument("camera '" + cam.name + "': stream size must be positive");
}

double fov_deg(const CameraModel& cam, double zoom, Axis axis) {
    if (!std::isfinite(zoom) || zoom < cam.zoom_min || zoom > cam.zoom_max)
        throw std::out_of_range("camera '" + cam.name + "': zoom " + std::to_string(zoom) +
                                " outside [" + std::to_string(cam.zoom_min) + ", " +
                                std::to_string(cam.zoom_max) + "]");
    const double d = axis == Axis::Horizontal ? cam.sensor_width_mm : cam.sensor_height_mm;
    const double f = zoom * cam.base_focal_length_mm;
    return rad2deg(2.0 * std::atan(d / (2.0 * f)));
}

std::pair<double, double> pixel_offset_angles(const PixelObservation& obs,
                                              double fov_u_deg, double fov_v_deg) {
    const double phi_u = (obs.u - obs.u_c) / (2.0 * obs.u_c) * fov_u_deg;
    const double theta_v = -(obs.v - obs.v_c) / (2.0 * obs.v_c) * fov_v_deg;
    return {phi_u, theta_v};
}

TargetAngles compose_target_angles(const GimbalState& gimbal,
                                   double phi_u_deg, double theta_v_deg) {
    TargetAngles out;
    out.phi_deg = wrap_deg(gimbal.pan_deg + phi_u_deg);
    out.theta_deg = gimbal.tilt_deg + theta_v_deg;
    out.psi_deg = 0.0;
    return out;
}

double relative_yaw(double drone_yaw_deg, double pad_yaw_deg) {
    return wrap_deg(pad_yaw_deg - drone_yaw_deg);
}

} // namespace fidland
