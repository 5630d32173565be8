#include "fidland/sensing.hpp"

#include <cmath>

#include "fidland/angles.hpp"

namespace fidland {

double marker_width_fraction(const CameraModel& cam, double zoom,
                             double marker_size_m, double range_m) {
    const double f = zoom * cam.base_focal_length_mm;
    return marker_size_m * f / (range_m * cam.sensor_width_mm);
}

namespace {

double marker_height_fraction(const CameraModel& cam, double zoom,
                              double marker_size_m, double range_m) {
    const double f = zoom * cam.base_focal_length_mm;
    return marker_size_m * f / (range_m * cam.sensor_height_mm);
}

bool stream_sees_pad(StreamId stream, PadType type) {
    if (type == PadType::Visual) return stream == StreamId::Wide || stream == StreamId::Zoom;
    return stream == StreamId::Ir; // both IR pad flavors need the IR camera
}

// explicit Box-Muller: std::normal_distribution draws differently across
// standard libraries, which would break cross-platform reproducibility
double gaussian(std::mt19937_64& rng, double sigma) {
    const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

} // namespace

std::vector<std::optional<PixelObservation>>
project_pad(const WorldState& world, const CameraRig& rig) {
    const CameraModel& cam = rig.camera(world.active_camera);
    const double fov_u = fov_deg(cam, world.zoom, Axis::Horizontal);
    const double fov_v = fov_deg(cam, world.zoom, Axis::Vertical);
    const double u_c = cam.stream_width_px / 2.0;
    const double v_c = cam.stream_height_px / 2.0;

    const Vec3 cam_pos = camera_position(world.drone, rig.mount_offset_m);
    const Vec3 d = world.pad.position - cam_pos;
    const double range = d.norm();

    std::vector<std::optional<PixelObservation>> out(world.pad.marker_sizes_m.size());
    if (range < 1e-9) return out;

    const double axis_pan = world.drone.yaw_deg + world.gimbal.pan_deg;
    // directly above or below, the bearing is degenerate: by convention the
    // target sits on the pan axis, so only the tilt offset places it
    const double az =
        d.horizontal_norm() < 1e-12 ? axis_pan : bearing_deg(d);
    const double el = elevation_deg(d);

    auto place = [&](double dpan, double dtilt, double& u, double& v) {
        u = u_c + dpan / fov_u * (2.0 * u_c);
        v = v_c - dtilt / fov_v * (2.0 * v_c);
        return u >= 0.0 && u <= 2.0 * u_c && v >= 0.0 && v <= 2.0 * v_c;
    };

    // The chart continues through the poles: a line of sight that crosses
    // straight down (or up) reappears with the pan flipped half a turn and
    // the tilt reflected about the pole. Try the direct representation
    // first, the through-the-pole one when the camera stares past nadir.
    double u = 0.0, v = 0.0;
    if (!place(wrap_deg(az - axis_pan), el - world.gimbal.tilt_deg, u, v)) {
        const double el_flipped = (el <= 0.0 ? -180.0 : 180.0) - el;
        if (!place(wrap_deg(az + 180.0 - axis_pan),
                   el_flipped - world.gimbal.tilt_deg, u, v))
            return out;
    }

    for (std::size_t i = 0; i < world.pad.marker_sizes_m.size(); ++i) {
        const double frac = marker_width_fraction(cam, world.zoom,
                                                  world.pad.marker_sizes_m[i], range);
        if (frac > 1.0) continue; // wider than the frame: not measurable
        out[i] = PixelObservation{u, v, u_c, v_c, frac};
    }
    return out;
}

std::optional<Detection> detect(const WorldState& world, const CameraRig& rig,
                                const SensingParams& params,
                                const std::vector<ObscurationEvent>& events,
                                std::mt19937_64& rng) {
    if (!stream_sees_pad(world.active_camera, world.pad.type)) return std::nullopt;

    for (const ObscurationEvent& e : events)
        if (world.t >= e.t_start_s && world.t < e.t_end_s) return std::nullopt;

    if (world.pad.type == PadType::PassiveIr) {
        // the drone's own reflection blankets the pad when hovering low
        // and nearly centered over it
        const Vec3 d = world.drone.position - world.pad.position;
        const double altitude = d.z;
        if (altitude < params.occlusion_height_m &&
            d.horizontal_norm() < params.occlusion_ratio * altitude)
            return std::nullopt;
    }

    const CameraModel& cam = rig.camera(world.active_camera);
    auto projections = project_pad(world, rig);

    const Vec3 cam_pos = camera_position(world.drone, rig.mount_offset_m);
    const double range = (world.pad.position - cam_pos).norm();

    for (std::size_t i = 0; i < projections.size(); ++i) {
        if (!projections[i]) continue;
        PixelObservation obs = *projections[i];

        const double s_pct = obs.s_p_frac * 100.0;
        if (s_pct < params.s_detect_min_percent || s_pct > params.s_detect_max_percent)
            continue;

        const double w_px = obs.s_p_frac * cam.stream_width_px;
        const double h_px = marker_height_fraction(cam, world.zoom,
                                                   world.pad.marker_sizes_m[i], range) *
                            cam.stream_height_px;
        if (obs.u - w_px / 2.0 < 0.0 || obs.u + w_px / 2.0 > cam.stream_width_px ||
            obs.v - h_px / 2.0 < 0.0 || obs.v + h_px / 2.0 > cam.stream_height_px)
            continue; // not fully inside the frame

        if (params.pixel_jitter_sigma_px > 0.0) {
            obs.u = clamp(obs.u + gaussian(rng, params.pixel_jitter_sigma_px),
                          0.0, 2.0 * obs.u_c);
            obs.v = clamp(obs.v + gaussian(rng, params.pixel_jitter_sigma_px),
                          0.0, 2.0 * obs.v_c);
        }

        Detection det;
        det.observation = obs;
        det.marker_id = static_cast<int>(i);
        det.s_p_percent = s_pct;
        det.pad_yaw_in_image_deg =
            wrap_deg(world.pad.yaw_deg - world.drone.yaw_deg - world.gimbal.pan_deg);
        det.timestamp_s = world.t;
        return det; // sizes are strictly decreasing: the first hit is largest
    }
    return std::nullopt;
}

} // namespace fidland
