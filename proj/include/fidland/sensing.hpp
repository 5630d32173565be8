#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fidland/world.hpp"

namespace fidland {

// One recognized marker. marker_id indexes PadState::marker_sizes_m.
// pad_yaw_in_image_deg is the pad yaw relative to the camera pan axis;
// composing it with the gimbal pan recovers the pad yaw relative to the
// drone heading.
struct Detection {
    PixelObservation observation;
    int marker_id = 0;
    double s_p_percent = 0.0;
    double pad_yaw_in_image_deg = 0.0;
    double timestamp_s = 0.0;
};

// While active ([t_start, t_end)) the pad is invisible to every camera.
// An optional horizontal displacement is applied to the pad when the
// event ends (an obstacle shoving the pad as it clears).
struct ObscurationEvent {
    double t_start_s = 0.0;
    double t_end_s = 0.0;
    double dx_m = 0.0;
    double dy_m = 0.0;
};

struct SensingParams {
    double s_detect_min_percent = 1.0;   // smallest usable marker image
    double s_detect_max_percent = 95.0;  // hard upper size gate
    double occlusion_height_m = 5.0;     // passive IR reflection ceiling
    double occlusion_ratio = 0.3;        // cone: horizontal < ratio * altitude
    double pixel_jitter_sigma_px = 0.0;  // optional zero-mean pixel noise
};

// Geometric projection of every pad marker into the active stream. The
// image maps pan/tilt offsets from the optical axis linearly onto pixels,
// so angles recovered from an observation compose exactly back to the
// world line of sight. An entry is nullopt when the marker center leaves
// the frame, the range is degenerate, or the marker overflows the frame
// width. No occlusion or pad-type rules here; detect() applies those.
std::vector<std::optional<PixelObservation>>
project_pad(const WorldState& world, const CameraRig& rig);

// Marker the vision stack reports for the current tick: the largest marker
// that projects fully inside the frame, sized within the detect gates, on a
// stream that can see this pad type, not obscured and not self-occluded
// (passive IR). nullopt when nothing qualifies.
std::optional<Detection> detect(const WorldState& world, const CameraRig& rig,
                                const SensingParams& params,
                                const std::vector<ObscurationEvent>& events,
                                std::mt19937_64& rng);

// Marker side length as a fraction of the frame width when imaged from
// range_m (pinhole ratio; fronto-parallel, no foreshortening).
double marker_width_fraction(const CameraModel& cam, double zoom,
                             double marker_size_m, double range_m);

} // namespace fidland
