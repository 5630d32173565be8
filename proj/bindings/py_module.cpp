#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fidland/angles.hpp"
#include "fidland/config.hpp"
#include "fidland/geometry.hpp"
#include "fidland/plot.hpp"
#include "fidland/runner.hpp"
#include "fidland/scenario.hpp"
#include "fidland/telemetry.hpp"

namespace py = pybind11;
using namespace fidland;

namespace {

py::dict record_to_dict(const RunRecord& rec) {
    py::dict d;
    d["scenario"] = rec.scenario_name;
    d["pad"] = to_string(rec.pad_type);
    d["seed"] = rec.seed;
    d["outcome"] = to_string(rec.outcome);
    d["landed"] = rec.outcome == Outcome::Landed;
    if (rec.outcome == Outcome::Landed) {
        d["touchdown_error_m"] = rec.touchdown_error_m;
    }
    d["duration_s"] = rec.duration_s;
    d["ticks"] = rec.rows.size();
    return d;
}

py::dict stats_to_dict(const TypeStats& st) {
    py::dict d;
    d["n"] = st.n;
    d["mean_error_m"] = st.mean_error_m;
    d["stddev_error_m"] = st.stddev_error_m;
    d["max_error_m"] = st.max_error_m;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fiducial landing simulator core";

    py::enum_<Axis>(m, "Axis")
        .value("HORIZONTAL", Axis::Horizontal)
        .value("VERTICAL", Axis::Vertical);

    py::class_<CameraModel>(m, "CameraModel")
        .def(py::init([](std::string name, double sw, double sh, double f,
                         double zmin, double zmax, int wpx, int hpx) {
                 CameraModel cam{std::move(name), sw, sh, f, zmin, zmax, wpx, hpx};
                 validate_camera(cam);
                 return cam;
             }),
             py::arg("name"), py::arg("sensor_width_mm"),
             py::arg("sensor_height_mm"), py::arg("base_focal_length_mm"),
             py::arg("zoom_min") = 1.0, py::arg("zoom_max") = 1.0,
             py::arg("stream_width_px") = 1920, py::arg("stream_height_px") = 1080)
        .def_readonly("name", &CameraModel::name)
        .def_readonly("zoom_min", &CameraModel::zoom_min)
        .def_readonly("zoom_max", &CameraModel::zoom_max);

    py::class_<GimbalState>(m, "GimbalState")
        .def(py::init([](double pan, double tilt) {
                 return GimbalState{pan, tilt};
             }),
             py::arg("pan_deg") = 0.0, py::arg("tilt_deg") = 0.0)
        .def_readwrite("pan_deg", &GimbalState::pan_deg)
        .def_readwrite("tilt_deg", &GimbalState::tilt_deg);

    py::class_<PixelObservation>(m, "PixelObservation")
        .def(py::init([](double u, double v, double uc, double vc, double frac) {
                 return PixelObservation{u, v, uc, vc, frac};
             }),
             py::arg("u"), py::arg("v"), py::arg("u_c"), py::arg("v_c"),
             py::arg("s_p_frac") = 0.1)
        .def_readwrite("u", &PixelObservation::u)
        .def_readwrite("v", &PixelObservation::v);

    py::class_<TargetAngles>(m, "TargetAngles")
        .def_readonly("phi_deg", &TargetAngles::phi_deg)
        .def_readonly("theta_deg", &TargetAngles::theta_deg)
        .def_readonly("psi_deg", &TargetAngles::psi_deg);

    m.def("wrap_deg", &wrap_deg, py::arg("angle_deg"),
          "wrap an angle into [-180, 180)");
    m.def("fov_deg", &fov_deg, py::arg("camera"), py::arg("zoom"), py::arg("axis"),
          "field of view of a camera at a zoom factor");
    m.def("pixel_offset_angles", &pixel_offset_angles, py::arg("observation"),
          py::arg("fov_u_deg"), py::arg("fov_v_deg"),
          "pixel offsets from the principal point as (phi_u, theta_v) degrees");
    m.def("compose_target_angles", &compose_target_angles, py::arg("gimbal"),
          py::arg("phi_u_deg"), py::arg("theta_v_deg"),
          "gimbal attitude plus pixel offsets -> line-of-sight angles");
    m.def("relative_yaw", &relative_yaw, py::arg("drone_yaw_deg"),
          py::arg("pad_yaw_deg"));

    m.def(
        "run_scenario_file",
        [](const std::string& path, std::optional<std::uint64_t> seed) {
            Scenario sc = load_scenario_file(path, config_from_env());
            if (seed) sc.seed = *seed;
            return record_to_dict(run_scenario(sc, /*keep_rows=*/false));
        },
        py::arg("path"), py::arg("seed") = std::nullopt,
        "simulate a scenario file; returns the outcome summary");

    m.def(
        "run_scenario_json",
        [](const std::string& text, std::optional<std::uint64_t> seed) {
            Scenario sc = parse_scenario(text, "<string>", config_from_env());
            if (seed) sc.seed = *seed;
            return record_to_dict(run_scenario(sc, /*keep_rows=*/false));
        },
        py::arg("text"), py::arg("seed") = std::nullopt,
        "simulate a scenario given as a JSON string");

    m.def(
        "run_scenario_csv",
        [](const std::string& path, std::optional<std::uint64_t> seed) {
            Scenario sc = load_scenario_file(path, config_from_env());
            if (seed) sc.seed = *seed;
            return to_csv(run_scenario(sc));
        },
        py::arg("path"), py::arg("seed") = std::nullopt,
        "simulate a scenario file; returns the telemetry CSV text");

    m.def(
        "plot_scenario_file",
        [](const std::string& path, std::optional<std::uint64_t> seed, int width) {
            Scenario sc = load_scenario_file(path, config_from_env());
            if (seed) sc.seed = *seed;
            return render_timeline(run_scenario(sc), width);
        },
        py::arg("path"), py::arg("seed") = std::nullopt, py::arg("width") = 100,
        "simulate a scenario file; returns a text timeline");

    m.def(
        "batch_dir",
        [](const std::string& dir, int jobs) {
            namespace fs = std::filesystem;
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(dir)) {
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            const SimConfig base = config_from_env();
            std::vector<Scenario> scenarios;
            for (const fs::path& f : files)
                scenarios.push_back(load_scenario_file(f.string(), base));
            const BatchSummary s = summarize(run_batch(scenarios, jobs));
            py::dict d;
            d["total_runs"] = s.total_runs;
            d["landed"] = s.landed;
            d["timed_out"] = s.timed_out;
            d["visual"] = stats_to_dict(s.visual);
            d["active_ir"] = stats_to_dict(s.active_ir);
            d["passive_ir"] = stats_to_dict(s.passive_ir);
            d["overall"] = stats_to_dict(s.overall);
            return d;
        },
        py::arg("dir"), py::arg("jobs") = 1,
        "run every scenario JSON in a directory and summarize");
}
