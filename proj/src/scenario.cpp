#include "fidland/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "fidland/angles.hpp"

namespace fidland {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
    throw std::invalid_argument(ctx + ": " + what);
}

double require_number(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key)) fail(ctx, std::string("missing key \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(ctx + "." + key, "expected a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback,
                 const std::string& ctx) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(ctx + "." + key, "expected a number");
    return v.get<double>();
}

PadType parse_pad_type(const std::string& s, const std::string& ctx) {
    if (s == "visual") return PadType::Visual;
    if (s == "active_ir") return PadType::ActiveIr;
    if (s == "passive_ir") return PadType::PassiveIr;
    fail(ctx, "pad type must be visual, active_ir or passive_ir; got \"" + s + "\"");
}

StreamId parse_stream(const std::string& s, const std::string& ctx) {
    if (s == "wide") return StreamId::Wide;
    if (s == "zoom") return StreamId::Zoom;
    if (s == "ir") return StreamId::Ir;
    fail(ctx, "stream must be wide, zoom or ir; got \"" + s + "\"");
}

} // namespace

std::vector<double> default_marker_sizes(PadType type) {
    if (type == PadType::Visual) return {0.8, 0.4, 0.2, 0.1};
    return {0.6};
}

StreamId default_stream(PadType type) {
    return type == PadType::Visual ? StreamId::Zoom : StreamId::Ir;
}

double auto_initial_zoom(const Scenario& sc, const CameraModel& cam,
                         const SensingParams& sensing) {
    const double r = std::hypot(sc.start_distance_m, sc.start_altitude_m);
    const std::vector<double> sizes =
        sc.marker_sizes_m.empty() ? default_marker_sizes(sc.pad_type)
                                  : sc.marker_sizes_m;
    const double s = sizes.front();
    // zoom where the largest marker sits exactly on the detection floor,
    // padded so the first sighting is comfortably above it
    const double z_floor = (sensing.s_detect_min_percent / 100.0) * r *
                           cam.sensor_width_mm /
                           (s * cam.base_focal_length_mm);
    return clamp(1.3 * z_floor, cam.zoom_min, cam.zoom_max);
}

Scenario parse_scenario(const std::string& text, const std::string& origin,
                        const SimConfig& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
    if (!j.is_object()) fail(origin, "expected a JSON object");
    check_allowed_keys(j,
                       {"schema_version", "name", "pad", "drone", "events",
                        "max_sim_time_s", "seed", "config"},
                       origin);

    if (!j.contains("schema_version")) fail(origin, "missing key \"schema_version\"");
    if (!j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != 1) {
        fail(origin + ".schema_version", "only schema_version 1 is supported");
    }

    Scenario sc;
    sc.config = base;
    if (j.contains("name")) sc.name = j["name"].get<std::string>();

    // pad
    if (!j.contains("pad")) fail(origin, "missing key \"pad\"");
    {
        const json& p = j["pad"];
        const std::string ctx = origin + ".pad";
        if (!p.is_object()) fail(ctx, "expected an object");
        check_allowed_keys(p, {"type", "yaw_deg", "marker_sizes_m"}, ctx);
        if (!p.contains("type")) fail(ctx, "missing key \"type\"");
        sc.pad_type = parse_pad_type(p["type"].get<std::string>(), ctx + ".type");
        sc.pad_yaw_deg = number_or(p, "yaw_deg", 0.0, ctx);
        if (p.contains("marker_sizes_m")) {
            const json& m = p["marker_sizes_m"];
            if (!m.is_array() || m.empty()) fail(ctx + ".marker_sizes_m", "expected a non-empty array");
            for (const json& v : m) {
                if (!v.is_number()) fail(ctx + ".marker_sizes_m", "expected numbers");
                sc.marker_sizes_m.push_back(v.get<double>());
            }
        }
    }

    // drone
    if (!j.contains("drone")) fail(origin, "missing key \"drone\"");
    {
        const json& d = j["drone"];
        const std::string ctx = origin + ".drone";
        if (!d.is_object()) fail(ctx, "expected an object");
        check_allowed_keys(d,
                           {"distance_m", "bearing_deg", "altitude_m", "yaw_deg",
                            "initial_zoom", "initial_stream"},
                           ctx);
        sc.start_distance_m = require_number(d, "distance_m", ctx);
        sc.start_altitude_m = require_number(d, "altitude_m", ctx);
        sc.start_bearing_deg = number_or(d, "bearing_deg", 0.0, ctx);
        sc.drone_yaw_deg = number_or(d, "yaw_deg", 0.0, ctx);
        if (sc.start_distance_m < 0.0) fail(ctx + ".distance_m", "must be >= 0");
        if (sc.start_altitude_m <= 0.0) fail(ctx + ".altitude_m", "must be > 0");
        if (d.contains("initial_zoom")) {
            const json& z = d["initial_zoom"];
            if (z.is_string() && z.get<std::string>() == "auto") {
                // keep automatic
            } else if (z.is_number()) {
                sc.initial_zoom = z.get<double>();
            } else {
                fail(ctx + ".initial_zoom", "expected a number or \"auto\"");
            }
        }
        if (d.contains("initial_stream")) {
            sc.initial_stream = parse_stream(d["initial_stream"].get<std::string>(),
                                             ctx + ".initial_stream");
        }
    }

    // events
    if (j.contains("events")) {
        const json& e = j["events"];
        const std::string ctx = origin + ".events";
        if (!e.is_object()) fail(ctx, "expected an object");
        check_allowed_keys(e, {"obscurations", "wind_gusts"}, ctx);
        if (e.contains("obscurations")) {
            if (!e["obscurations"].is_array()) fail(ctx + ".obscurations", "expected an array");
            for (const json& o : e["obscurations"]) {
                const std::string octx = ctx + ".obscurations";
                check_allowed_keys(o, {"t_start_s", "t_end_s", "dx_m", "dy_m"}, octx);
                ObscurationEvent ev;
                ev.t_start_s = require_number(o, "t_start_s", octx);
                ev.t_end_s = require_number(o, "t_end_s", octx);
                ev.dx_m = number_or(o, "dx_m", 0.0, octx);
                ev.dy_m = number_or(o, "dy_m", 0.0, octx);
                if (ev.t_start_s < 0.0 || ev.t_end_s <= ev.t_start_s) {
                    fail(octx, "need 0 <= t_start_s < t_end_s");
                }
                sc.obscurations.push_back(ev);
            }
        }
        if (e.contains("wind_gusts")) {
            if (!e["wind_gusts"].is_array()) fail(ctx + ".wind_gusts", "expected an array");
            for (const json& g : e["wind_gusts"]) {
                const std::string gctx = ctx + ".wind_gusts";
                check_allowed_keys(g, {"t_start_s", "t_end_s", "velocity_mps"}, gctx);
                WindGust gust;
                gust.t_start_s = require_number(g, "t_start_s", gctx);
                gust.t_end_s = require_number(g, "t_end_s", gctx);
                if (!g.contains("velocity_mps") || !g["velocity_mps"].is_array() ||
                    g["velocity_mps"].size() != 3) {
                    fail(gctx + ".velocity_mps", "expected [x, y, z]");
                }
                gust.velocity_mps = {g["velocity_mps"][0].get<double>(),
                                     g["velocity_mps"][1].get<double>(),
                                     g["velocity_mps"][2].get<double>()};
                if (gust.t_start_s < 0.0 || gust.t_end_s <= gust.t_start_s) {
                    fail(gctx, "need 0 <= t_start_s < t_end_s");
                }
                sc.gusts.push_back(gust);
            }
        }
    }

    sc.max_sim_time_s = number_or(j, "max_sim_time_s", sc.max_sim_time_s, origin);
    if (sc.max_sim_time_s <= 0.0) fail(origin + ".max_sim_time_s", "must be > 0");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            fail(origin + ".seed", "expected an integer");
        }
        sc.seed = j["seed"].get<std::uint64_t>();
    }

    if (j.contains("config")) {
        apply_config_json(sc.config, j["config"], origin + ".config");
    }

    // cross-field checks
    PadState pad;
    pad.type = sc.pad_type;
    pad.marker_sizes_m =
        sc.marker_sizes_m.empty() ? default_marker_sizes(sc.pad_type) : sc.marker_sizes_m;
    try {
        validate_pad(pad);
    } catch (const std::invalid_argument& e) {
        fail(origin + ".pad.marker_sizes_m", e.what());
    }
    const StreamId stream = sc.initial_stream.value_or(default_stream(sc.pad_type));
    if (sc.initial_zoom) {
        const CameraModel& cam = sc.config.rig.camera(stream);
        if (*sc.initial_zoom < cam.zoom_min || *sc.initial_zoom > cam.zoom_max) {
            fail(origin + ".drone.initial_zoom",
                 "outside the zoom range of the " + cam.name + " camera");
        }
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path, const SimConfig& base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_scenario(text, path, base);
}

WorldState initial_world(const Scenario& sc) {
    WorldState w;
    w.t = 0.0;
    w.rng_seed = sc.seed;

    w.pad.position = {0.0, 0.0, 0.0};
    w.pad.yaw_deg = sc.pad_yaw_deg;
    w.pad.type = sc.pad_type;
    w.pad.marker_sizes_m =
        sc.marker_sizes_m.empty() ? default_marker_sizes(sc.pad_type) : sc.marker_sizes_m;
    validate_pad(w.pad);

    const double b = deg2rad(sc.start_bearing_deg);
    w.drone.position = {sc.start_distance_m * std::sin(b),
                        sc.start_distance_m * std::cos(b), sc.start_altitude_m};
    w.drone.yaw_deg = wrap_deg(sc.drone_yaw_deg);
    w.drone.velocity = {0.0, 0.0, 0.0};
    w.drone.motors_on = true;

    w.gimbal.pan_deg = 0.0;
    w.gimbal.tilt_deg = sc.config.controller.static_tilt_deg;

    w.active_camera = sc.initial_stream.value_or(default_stream(sc.pad_type));
    const CameraModel& cam = sc.config.rig.camera(w.active_camera);
    w.zoom = sc.initial_zoom.value_or(
        auto_initial_zoom(sc, cam, sc.config.sensing));

    w.gusts = sc.gusts;
    w.touchdown = false;
    return w;
}

} // namespace fidland
