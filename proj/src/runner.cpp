#include "fidland/runner.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "fidland/angles.hpp"
#include "fidland/sensing.hpp"

namespace fidland {

const char* to_string(Outcome o) {
    return o == Outcome::Landed ? "landed" : "timeout";
}

namespace {

ControllerInput make_input(const WorldState& w, const SimConfig& cfg,
                           const std::optional<Detection>& det, double dt) {
    ControllerInput in;
    in.gimbal = w.gimbal;
    in.zoom = w.zoom;
    in.active_stream = w.active_camera;
    in.motor_stopped = !w.drone.motors_on;
    in.dt_s = dt;
    if (det) {
        const CameraModel& cam = cfg.rig.camera(w.active_camera);
        const double fov_u = fov_deg(cam, w.zoom, Axis::Horizontal);
        const double fov_v = fov_deg(cam, w.zoom, Axis::Vertical);
        const auto [phi_u, theta_v] =
            pixel_offset_angles(det->observation, fov_u, fov_v);
        const TargetAngles ang = compose_target_angles(w.gimbal, phi_u, theta_v);
        DetectionSignals s;
        s.phi_deg = ang.phi_deg;
        s.theta_deg = ang.theta_deg;
        s.psi_deg = wrap_deg(det->pad_yaw_in_image_deg + w.gimbal.pan_deg);
        s.s_p_percent = det->s_p_percent;
        s.phi_u_deg = phi_u;
        s.theta_v_deg = theta_v;
        in.detection = s;
    }
    return in;
}

RunRow make_row(const WorldState& w, const Controller& ctrl,
                const CommandSet& cmd, const ControllerInput& in) {
    RunRow r;
    r.t_s = w.t;
    r.state = ctrl.state;
    r.forward_mps = cmd.forward_mps;
    r.right_mps = cmd.right_mps;
    r.up_mps = cmd.up_mps;
    r.yaw_rate_dps = cmd.yaw_rate_dps;
    r.gimbal_pan_deg = w.gimbal.pan_deg;
    r.gimbal_tilt_deg = w.gimbal.tilt_deg;
    r.zoom = w.zoom;
    r.stream = w.active_camera;
    if (in.detection) {
        r.detected = true;
        r.s_p_percent = in.detection->s_p_percent;
        r.phi_deg = in.detection->phi_deg;
        r.theta_deg = in.detection->theta_deg;
        r.psi_deg = in.detection->psi_deg;
    }
    r.x_m = w.drone.position.x;
    r.y_m = w.drone.position.y;
    r.z_m = w.drone.position.z;
    r.yaw_deg = w.drone.yaw_deg;
    return r;
}

} // namespace

RunRecord run_scenario(const Scenario& sc, bool keep_rows) {
    const SimConfig& cfg = sc.config;
    const double dt = cfg.world.dt_s;

    RunRecord rec;
    rec.scenario_name = sc.name;
    rec.pad_type = sc.pad_type;
    rec.seed = sc.seed;
    rec.start_distance_m = sc.start_distance_m;
    rec.start_altitude_m = sc.start_altitude_m;

    WorldState w = initial_world(sc);
    Controller ctrl;
    std::mt19937_64 rng(sc.seed);
    std::vector<char> displaced(sc.obscurations.size(), 0);

    for (;;) {
        // an obscuration that has just cleared may have shoved the pad
        for (std::size_t i = 0; i < sc.obscurations.size(); ++i) {
            const ObscurationEvent& ev = sc.obscurations[i];
            if (!displaced[i] && w.t >= ev.t_end_s) {
                w.pad.position.x += ev.dx_m;
                w.pad.position.y += ev.dy_m;
                displaced[i] = 1;
            }
        }

        const std::optional<Detection> det =
            detect(w, cfg.rig, cfg.sensing, sc.obscurations, rng);
        const ControllerInput in = make_input(w, cfg, det, dt);

        auto [next, raw_cmd] = tick(ctrl, in, cfg.controller, cfg.rig);
        ctrl = next;
        const CommandSet cmd = saturate(raw_cmd);

        if (keep_rows) rec.rows.push_back(make_row(w, ctrl, cmd, in));

        if (ctrl.state == StateId::Landed) {
            rec.outcome = Outcome::Landed;
            break;
        }
        if (w.t >= sc.max_sim_time_s) {
            rec.outcome = Outcome::Timeout;
            break;
        }
        w = step(w, cmd, dt, cfg.rig, cfg.world);
    }

    rec.duration_s = w.t;
    if (rec.outcome == Outcome::Landed) {
        rec.touchdown_error_m = touchdown_error(w, cfg.rig.mount_offset_m);
    }
    return rec;
}

namespace {

void accumulate(TypeStats& st, const RunRecord& r) {
    st.n += 1;
    st.mean_error_m += r.touchdown_error_m;
    st.max_error_m = std::max(st.max_error_m, r.touchdown_error_m);
    st.max_start_altitude_m = std::max(st.max_start_altitude_m, r.start_altitude_m);
    st.max_start_distance_m = std::max(st.max_start_distance_m, r.start_distance_m);
}

void finish_mean(TypeStats& st) {
    if (st.n > 0) st.mean_error_m /= st.n;
}

} // namespace

BatchSummary summarize(const std::vector<RunRecord>& records) {
    BatchSummary out;
    out.total_runs = static_cast<int>(records.size());

    for (const RunRecord& r : records) {
        if (r.outcome != Outcome::Landed) {
            out.timed_out += 1;
            continue;
        }
        out.landed += 1;
        accumulate(out.overall, r);
        switch (r.pad_type) {
            case PadType::Visual: accumulate(out.visual, r); break;
            case PadType::ActiveIr: accumulate(out.active_ir, r); break;
            case PadType::PassiveIr: accumulate(out.passive_ir, r); break;
        }
    }
    finish_mean(out.visual);
    finish_mean(out.active_ir);
    finish_mean(out.passive_ir);
    finish_mean(out.overall);

    // second pass for the sample stddev
    auto add_sq = [&](TypeStats& st, double err) {
        st.stddev_error_m += (err - st.mean_error_m) * (err - st.mean_error_m);
    };
    for (const RunRecord& r : records) {
        if (r.outcome != Outcome::Landed) continue;
        add_sq(out.overall, r.touchdown_error_m);
        switch (r.pad_type) {
            case PadType::Visual: add_sq(out.visual, r.touchdown_error_m); break;
            case PadType::ActiveIr: add_sq(out.active_ir, r.touchdown_error_m); break;
            case PadType::PassiveIr: add_sq(out.passive_ir, r.touchdown_error_m); break;
        }
    }
    auto finish_std = [&](TypeStats& st, const char* label) {
        if (st.n >= 2) {
            st.stddev_error_m = std::sqrt(st.stddev_error_m / (st.n - 1));
        } else {
            st.stddev_error_m = 0.0;
            if (st.n == 1) {
                out.notes.push_back(std::string(label) +
                                    ": single landed run, stddev reported as 0");
            }
        }
    };
    finish_std(out.visual, "visual");
    finish_std(out.active_ir, "active_ir");
    finish_std(out.passive_ir, "passive_ir");
    finish_std(out.overall, "overall");
    return out;
}

std::vector<RunRecord> run_batch(const std::vector<Scenario>& scenarios,
                                 int jobs, bool keep_rows) {
    std::vector<RunRecord> records(scenarios.size());
    if (scenarios.empty()) return records;
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(scenarios.size())));

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= scenarios.size()) return;
            records[i] = run_scenario(scenarios[i], keep_rows);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return records;
}

} // namespace fidland
