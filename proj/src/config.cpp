#include "fidland/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fidland {

namespace {

using nlohmann::json;

using FieldMap = std::vector<std::pair<const char*, double*>>;

double number_at(const json& obj, const char* key, const std::string& ctx) {
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw std::invalid_argument(ctx + "." + key + ": expected a number");
    }
    return v.get<double>();
}

// Overlay a flat object of numeric fields. Every key must name a field.
void overlay_numbers(const json& obj, const FieldMap& fields,
                     const std::string& ctx) {
    if (!obj.is_object()) {
        throw std::invalid_argument(ctx + ": expected an object");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const auto& [name, slot] : fields) {
            if (item.key() == name) {
                *slot = number_at(obj, name, ctx);
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument(ctx + ": unknown key \"" + item.key() +
                                        "\"");
        }
    }
}

void overlay_camera(CameraModel& cam, const json& obj, const std::string& ctx) {
    if (!obj.is_object()) {
        throw std::invalid_argument(ctx + ": expected an object");
    }
    check_allowed_keys(obj,
                       {"name", "sensor_width_mm", "sensor_height_mm",
                        "base_focal_length_mm", "zoom_min", "zoom_max",
                        "stream_width_px", "stream_height_px"},
                       ctx);
    if (obj.contains("name")) cam.name = obj.at("name").get<std::string>();
    FieldMap doubles = {
        {"sensor_width_mm", &cam.sensor_width_mm},
        {"sensor_height_mm", &cam.sensor_height_mm},
        {"base_focal_length_mm", &cam.base_focal_length_mm},
        {"zoom_min", &cam.zoom_min},
        {"zoom_max", &cam.zoom_max},
    };
    for (const auto& [name, slot] : doubles) {
        if (obj.contains(name)) *slot = number_at(obj, name, ctx);
    }
    if (obj.contains("stream_width_px")) {
        cam.stream_width_px = obj.at("stream_width_px").get<int>();
    }
    if (obj.contains("stream_height_px")) {
        cam.stream_height_px = obj.at("stream_height_px").get<int>();
    }
    validate_camera(cam);
}

void overlay_rig(CameraRig& rig, const json& obj, const std::string& ctx) {
    check_allowed_keys(obj,
                       {"wide", "zoom", "ir", "tilt_min_deg", "tilt_max_deg",
                        "mount_offset_m"},
                       ctx);
    if (obj.contains("wide")) overlay_camera(rig.wide, obj["wide"], ctx + ".wide");
    if (obj.contains("zoom")) overlay_camera(rig.zoom, obj["zoom"], ctx + ".zoom");
    if (obj.contains("ir")) overlay_camera(rig.ir, obj["ir"], ctx + ".ir");
    if (obj.contains("tilt_min_deg")) {
        rig.tilt_min_deg = number_at(obj, "tilt_min_deg", ctx);
    }
    if (obj.contains("tilt_max_deg")) {
        rig.tilt_max_deg = number_at(obj, "tilt_max_deg", ctx);
    }
    if (rig.tilt_min_deg >= rig.tilt_max_deg) {
        throw std::invalid_argument(ctx + ": tilt_min_deg must be below tilt_max_deg");
    }
    if (obj.contains("mount_offset_m")) {
        const json& off = obj["mount_offset_m"];
        if (!off.is_array() || off.size() != 3) {
            throw std::invalid_argument(ctx +
                                        ".mount_offset_m: expected [x, y, z]");
        }
        rig.mount_offset_m = {off[0].get<double>(), off[1].get<double>(),
                              off[2].get<double>()};
    }
}

} // namespace

void check_allowed_keys(const nlohmann::json& obj,
                        std::initializer_list<const char*> allowed,
                        const std::string& context) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* name : allowed) {
            if (item.key() == name) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw std::invalid_argument(context + ": unknown key \"" +
                                        item.key() + "\"");
        }
    }
}

SimConfig default_config() {
    SimConfig cfg;
    cfg.rig.wide = {"wide", 36.0, 24.0, 18.0, 1.0, 1.0, 1920, 1080};
    cfg.rig.zoom = {"zoom", 8.0, 6.0, 6.0, 2.0, 6.0, 1920, 1080};
    cfg.rig.ir = {"ir", 8.0, 6.4, 24.0, 1.0, 1.0, 640, 512};
    return cfg;
}

void apply_config_json(SimConfig& cfg, const nlohmann::json& j,
                       const std::string& context) {
    if (!j.is_object()) {
        throw std::invalid_argument(context + ": expected an object");
    }
    check_allowed_keys(j, {"rig", "world", "sensing", "controller"}, context);

    if (j.contains("rig")) overlay_rig(cfg.rig, j["rig"], context + ".rig");

    if (j.contains("world")) {
        WorldParams& w = cfg.world;
        overlay_numbers(j["world"],
                        {{"velocity_tau_s", &w.velocity_tau_s},
                         {"gimbal_rate_max_dps", &w.gimbal_rate_max_dps},
                         {"zoom_slew_factor_per_s", &w.zoom_slew_factor_per_s},
                         {"zoom_out_rate_per_s", &w.zoom_out_rate_per_s},
                         {"dt_s", &w.dt_s}},
                        context + ".world");
        if (w.dt_s <= 0.0 || w.dt_s > 0.25) {
            throw std::invalid_argument(context + ".world.dt_s: out of range");
        }
    }

    if (j.contains("sensing")) {
        SensingParams& s = cfg.sensing;
        overlay_numbers(j["sensing"],
                        {{"s_detect_min_percent", &s.s_detect_min_percent},
                         {"s_detect_max_percent", &s.s_detect_max_percent},
                         {"occlusion_height_m", &s.occlusion_height_m},
                         {"occlusion_ratio", &s.occlusion_ratio},
                         {"pixel_jitter_sigma_px", &s.pixel_jitter_sigma_px}},
                        context + ".sensing");
    }

    if (j.contains("controller")) {
        ControllerConfig& c = cfg.controller;
        overlay_numbers(
            j["controller"],
            {{"theta_c_deg", &c.theta_c_deg},
             {"theta_d_deg", &c.theta_d_deg},
             {"theta_a_deg", &c.theta_a_deg},
             {"theta_y_deg", &c.theta_y_deg},
             {"theta_h_deg", &c.theta_h_deg},
             {"zoom_commit_max", &c.zoom_commit_max},
             {"s_commit_min_percent", &c.s_commit_min_percent},
             {"band_low_percent", &c.band_low_percent},
             {"band_high_percent", &c.band_high_percent},
             {"zoom_frame_margin", &c.zoom_frame_margin},
             {"search_yaw_rate_dps", &c.search_yaw_rate_dps},
             {"search_tilt_rate_dps", &c.search_tilt_rate_dps},
             {"search_coverage_factor", &c.search_coverage_factor},
             {"static_tilt_deg", &c.static_tilt_deg},
             {"search_tilt_down_deg", &c.search_tilt_down_deg},
             {"search_tilt_up_deg", &c.search_tilt_up_deg},
             {"static_search_duration_s", &c.static_search_duration_s},
             {"zoomout1_timeout_s", &c.zoomout1_timeout_s},
             {"zoomout2_timeout_s", &c.zoomout2_timeout_s},
             {"ascent_timeout_s", &c.ascent_timeout_s},
             {"k_gimbal_per_s", &c.k_gimbal_per_s},
             {"k_yaw_per_s", &c.k_yaw_per_s},
             {"approach_speed_mps", &c.approach_speed_mps},
             {"k_right_mps_per_deg", &c.k_right_mps_per_deg},
             {"k_nadir_p", &c.k_nadir_p},
             {"k_nadir_d", &c.k_nadir_d},
             {"descent_speed_mps", &c.descent_speed_mps},
             {"commit_speed_mps", &c.commit_speed_mps},
             {"ascent_speed_mps", &c.ascent_speed_mps},
             {"aim_snap_deg", &c.aim_snap_deg},
             {"gimbal_down_tol_deg", &c.gimbal_down_tol_deg},
             {"ascent_pan_sweep_dps", &c.ascent_pan_sweep_dps}},
            context + ".controller");
    }
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    SimConfig cfg = default_config();
    apply_config_json(cfg, j, path);
    return cfg;
}

SimConfig config_from_env() {
    const char* path = std::getenv("FIDLAND_CONFIG");
    if (path != nullptr && *path != '\0') {
        return load_config_file(path);
    }
    return default_config();
}

} // namespace fidland
