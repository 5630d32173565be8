#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fidland/controller.hpp"
#include "fidland/scenario.hpp"

namespace fidland {

// One telemetry row per control tick: the command the policy issued this
// tick and the world as the policy saw it (before the step).
struct RunRow {
    double t_s = 0.0;
    StateId state = StateId::StaticSearch;
    double forward_mps = 0.0;
    double right_mps = 0.0;
    double up_mps = 0.0;
    double yaw_rate_dps = 0.0;
    double gimbal_pan_deg = 0.0;
    double gimbal_tilt_deg = 0.0;
    double zoom = 1.0;
    StreamId stream = StreamId::Zoom;
    bool detected = false;
    double s_p_percent = 0.0; // the four detection fields are valid
    double phi_deg = 0.0;     // only when detected is set
    double theta_deg = 0.0;
    double psi_deg = 0.0;
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;
    double yaw_deg = 0.0;
};

enum class Outcome { Landed, Timeout };

const char* to_string(Outcome o);

struct RunRecord {
    std::string scenario_name;
    PadType pad_type = PadType::Visual;
    std::uint64_t seed = 0;
    double start_distance_m = 0.0;
    double start_altitude_m = 0.0;
    Outcome outcome = Outcome::Timeout;
    double touchdown_error_m = 0.0; // valid only when outcome == Landed
    double duration_s = 0.0;
    std::vector<RunRow> rows; // empty when rows were not kept
};

// Simulate the scenario to touchdown or timeout. keep_rows controls whether
// per-tick telemetry is retained (batch runs drop it to bound memory).
RunRecord run_scenario(const Scenario& sc, bool keep_rows = true);

// Landing-error statistics over the landed runs of one pad type.
struct TypeStats {
    int n = 0;
    double mean_error_m = 0.0;
    double stddev_error_m = 0.0; // sample stddev (n - 1); 0 when n < 2
    double max_error_m = 0.0;
    double max_start_altitude_m = 0.0;
    double max_start_distance_m = 0.0;
};

struct BatchSummary {
    TypeStats visual;
    TypeStats active_ir;
    TypeStats passive_ir;
    TypeStats overall;
    int total_runs = 0;
    int landed = 0;
    int timed_out = 0;
    std::vector<std::string> notes; // e.g. stddev degenerate at n = 1
};

BatchSummary summarize(const std::vector<RunRecord>& records);

// Run every scenario, jobs at a time. Records come back in input order.
std::vector<RunRecord> run_batch(const std::vector<Scenario>& scenarios,
                                 int jobs, bool keep_rows = false);

} // namespace fidland
