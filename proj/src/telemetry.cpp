#include "fidland/telemetry.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fidland {

const char* const kCsvHeader =
    "t,state,forward_mps,right_mps,up_mps,yaw_rate_dps,gimbal_pan_deg,"
    "gimbal_tilt_deg,zoom,stream,detected,s_p_percent,phi_deg,theta_deg,"
    "psi_deg,x_m,y_m,z_m,yaw_deg";

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

StateId state_from_string(const std::string& s, const std::string& ctx) {
    static constexpr StateId all[] = {
        StateId::StaticSearch, StateId::SearchDown,   StateId::SearchUp,
        StateId::AimCamera,    StateId::AimDrone,     StateId::Approach,
        StateId::YawAlign,     StateId::HorizontalAlignment,
        StateId::Descent,      StateId::Commit,       StateId::Landed,
        StateId::ZoomOut1,     StateId::ZoomOut2,     StateId::Ascent,
    };
    for (StateId id : all)
        if (s == to_string(id)) return id;
    throw std::invalid_argument(ctx + ": unknown state \"" + s + "\"");
}

StreamId stream_from_string(const std::string& s, const std::string& ctx) {
    if (s == "wide") return StreamId::Wide;
    if (s == "zoom") return StreamId::Zoom;
    if (s == "ir") return StreamId::Ir;
    throw std::invalid_argument(ctx + ": unknown stream \"" + s + "\"");
}

PadType pad_from_string(const std::string& s, const std::string& ctx) {
    if (s == "visual") return PadType::Visual;
    if (s == "active_ir") return PadType::ActiveIr;
    if (s == "passive_ir") return PadType::PassiveIr;
    throw std::invalid_argument(ctx + ": unknown pad type \"" + s + "\"");
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double num(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(ctx + ": bad number \"" + s + "\"");
    }
}

} // namespace

std::string to_csv(const RunRecord& rec) {
    std::ostringstream out;
    out << "# scenario: " << rec.scenario_name << "\n";
    out << "# pad: " << to_string(rec.pad_type) << "\n";
    out << "# seed: " << rec.seed << "\n";
    out << "# start_distance_m: " << fmt(rec.start_distance_m) << "\n";
    out << "# start_altitude_m: " << fmt(rec.start_altitude_m) << "\n";
    out << "# outcome: " << to_string(rec.outcome) << "\n";
    if (rec.outcome == Outcome::Landed) {
        out << "# touchdown_error_m: " << fmt(rec.touchdown_error_m) << "\n";
    }
    out << "# duration_s: " << fmt(rec.duration_s) << "\n";
    out << kCsvHeader << "\n";
    for (const RunRow& r : rec.rows) {
        out << fmt(r.t_s) << ',' << to_string(r.state) << ','
            << fmt(r.forward_mps) << ',' << fmt(r.right_mps) << ','
            << fmt(r.up_mps) << ',' << fmt(r.yaw_rate_dps) << ','
            << fmt(r.gimbal_pan_deg) << ',' << fmt(r.gimbal_tilt_deg) << ','
            << fmt(r.zoom) << ',' << to_string(r.stream) << ','
            << (r.detected ? '1' : '0') << ',';
        if (r.detected) {
            out << fmt(r.s_p_percent) << ',' << fmt(r.phi_deg) << ','
                << fmt(r.theta_deg) << ',' << fmt(r.psi_deg);
        } else {
            out << ",,,";
        }
        out << ',' << fmt(r.x_m) << ',' << fmt(r.y_m) << ',' << fmt(r.z_m)
            << ',' << fmt(r.yaw_deg) << "\n";
    }
    return out.str();
}

void write_csv_file(const RunRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_csv(rec);
}

RunRecord read_csv(std::istream& in, const std::string& origin) {
    RunRecord rec;
    std::string line;
    bool saw_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string ctx = origin + ":" + std::to_string(line_no);
        if (line[0] == '#') {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) continue;
            const std::string key = line.substr(2, colon - 2);
            const std::string val = line.substr(colon + 2);
            if (key == "scenario") rec.scenario_name = val;
            else if (key == "pad") rec.pad_type = pad_from_string(val, ctx);
            else if (key == "seed") rec.seed = std::stoull(val);
            else if (key == "start_distance_m") rec.start_distance_m = num(val, ctx);
            else if (key == "start_altitude_m") rec.start_altitude_m = num(val, ctx);
            else if (key == "outcome")
                rec.outcome = val == "landed" ? Outcome::Landed : Outcome::Timeout;
            else if (key == "touchdown_error_m") rec.touchdown_error_m = num(val, ctx);
            else if (key == "duration_s") rec.duration_s = num(val, ctx);
            continue;
        }
        if (!saw_header) {
            if (line != kCsvHeader)
                throw std::invalid_argument(ctx + ": unexpected header");
            saw_header = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line);
        if (f.size() != 19)
            throw std::invalid_argument(ctx + ": expected 19 fields, got " +
                                        std::to_string(f.size()));
        RunRow r;
        r.t_s = num(f[0], ctx);
        r.state = state_from_string(f[1], ctx);
        r.forward_mps = num(f[2], ctx);
        r.right_mps = num(f[3], ctx);
        r.up_mps = num(f[4], ctx);
        r.yaw_rate_dps = num(f[5], ctx);
        r.gimbal_pan_deg = num(f[6], ctx);
        r.gimbal_tilt_deg = num(f[7], ctx);
        r.zoom = num(f[8], ctx);
        r.stream = stream_from_string(f[9], ctx);
        r.detected = f[10] == "1";
        if (r.detected) {
            r.s_p_percent = num(f[11], ctx);
            r.phi_deg = num(f[12], ctx);
            r.theta_deg = num(f[13], ctx);
            r.psi_deg = num(f[14], ctx);
        }
        r.x_m = num(f[15], ctx);
        r.y_m = num(f[16], ctx);
        r.z_m = num(f[17], ctx);
        r.yaw_deg = num(f[18], ctx);
        rec.rows.push_back(r);
    }
    if (!saw_header)
        throw std::invalid_argument(origin + ": no telemetry header found");
    return rec;
}

RunRecord read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_csv(in, path);
}

nlohmann::json to_json(const RunRecord& rec) {
    nlohmann::json j;
    j["scenario"] = rec.scenario_name;
    j["pad"] = to_string(rec.pad_type);
    j["seed"] = rec.seed;
    j["start_distance_m"] = rec.start_distance_m;
    j["start_altitude_m"] = rec.start_altitude_m;
    j["outcome"] = to_string(rec.outcome);
    if (rec.outcome == Outcome::Landed)
        j["touchdown_error_m"] = rec.touchdown_error_m;
    j["duration_s"] = rec.duration_s;
    nlohmann::json cols = nlohmann::json::array();
    for (const std::string& c : split_csv(kCsvHeader)) cols.push_back(c);
    j["columns"] = std::move(cols);
    nlohmann::json rows = nlohmann::json::array();
    for (const RunRow& r : rec.rows) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(r.t_s);
        row.push_back(to_string(r.state));
        row.push_back(r.forward_mps);
        row.push_back(r.right_mps);
        row.push_back(r.up_mps);
        row.push_back(r.yaw_rate_dps);
        row.push_back(r.gimbal_pan_deg);
        row.push_back(r.gimbal_tilt_deg);
        row.push_back(r.zoom);
        row.push_back(to_string(r.stream));
        row.push_back(r.detected);
        if (r.detected) {
            row.push_back(r.s_p_percent);
            row.push_back(r.phi_deg);
            row.push_back(r.theta_deg);
            row.push_back(r.psi_deg);
        } else {
            row.push_back(nullptr);
            row.push_back(nullptr);
            row.push_back(nullptr);
            row.push_back(nullptr);
        }
        row.push_back(r.x_m);
        row.push_back(r.y_m);
        row.push_back(r.z_m);
        row.push_back(r.yaw_deg);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

void write_json_file(const RunRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(rec).dump(2) << "\n";
}

nlohmann::json to_json(const TypeStats& st) {
    return nlohmann::json{{"n", st.n},
                          {"mean_error_m", st.mean_error_m},
                          {"stddev_error_m", st.stddev_error_m},
                          {"max_error_m", st.max_error_m},
                          {"max_start_altitude_m", st.max_start_altitude_m},
                          {"max_start_distance_m", st.max_start_distance_m}};
}

nlohmann::json to_json(const BatchSummary& s) {
    nlohmann::json j;
    j["total_runs"] = s.total_runs;
    j["landed"] = s.landed;
    j["timed_out"] = s.timed_out;
    j["visual"] = to_json(s.visual);
    j["active_ir"] = to_json(s.active_ir);
    j["passive_ir"] = to_json(s.passive_ir);
    j["overall"] = to_json(s.overall);
    j["notes"] = s.notes;
    return j;
}

} // namespace fidland
