#include "fidland/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace fidland {

char state_letter(StateId s) {
    switch (s) {
        case StateId::StaticSearch: return 'S';
        case StateId::SearchDown: return 'v';
        case StateId::SearchUp: return '^';
        case StateId::AimCamera: return 'c';
        case StateId::AimDrone: return 'd';
        case StateId::Approach: return 'A';
        case StateId::YawAlign: return 'y';
        case StateId::HorizontalAlignment: return 'H';
        case StateId::Descent: return 'D';
        case StateId::Commit: return 'C';
        case StateId::Landed: return 'L';
        case StateId::ZoomOut1: return '1';
        case StateId::ZoomOut2: return '2';
        case StateId::Ascent: return 'a';
    }
    return '?';
}

namespace {

constexpr char kLevels[] = " .:-=+*#%@";
constexpr int kNumLevels = 10;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string sparkline(const std::vector<double>& vals) {
    double lo = vals.empty() ? 0.0 : vals.front();
    double hi = lo;
    for (double v : vals) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::string line;
    for (double v : vals) {
        if (hi - lo < 1e-12) {
            line += kLevels[kNumLevels / 2];
        } else {
            int idx = static_cast<int>((v - lo) / (hi - lo) * (kNumLevels - 1) + 0.5);
            line += kLevels[std::clamp(idx, 0, kNumLevels - 1)];
        }
    }
    line += "  [" + fmt(lo) + " .. " + fmt(hi) + "]";
    return line;
}

} // namespace

std::string render_timeline(const RunRecord& rec, int width) {
    std::ostringstream out;
    out << "run: " << rec.scenario_name << " (" << to_string(rec.pad_type)
        << ", seed " << rec.seed << ")  outcome: " << to_string(rec.outcome);
    if (rec.outcome == Outcome::Landed) {
        out << "  error " << fmt(rec.touchdown_error_m) << " m";
    }
    out << "  duration " << fmt(rec.duration_s) << " s\n";

    if (rec.rows.empty()) {
        out << "(no telemetry rows)\n";
        return out.str();
    }
    width = std::max(10, std::min(width, static_cast<int>(rec.rows.size())));

    const std::size_t n = rec.rows.size();
    std::string states;
    std::vector<double> alt(width), horiz(width), zoom(width), sp(width), det(width);
    std::set<StateId> seen;
    for (int i = 0; i < width; ++i) {
        const std::size_t lo = n * i / width;
        const std::size_t hi = std::max(lo + 1, n * (i + 1) / width);
        double a = 0, h = 0, z = 0, s = 0, d = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            const RunRow& r = rec.rows[k];
            a += r.z_m;
            h += std::hypot(r.x_m, r.y_m);
            z += r.zoom;
            s += r.detected ? r.s_p_percent : 0.0;
            d += r.detected ? 1.0 : 0.0;
        }
        const double m = static_cast<double>(hi - lo);
        alt[i] = a / m;
        horiz[i] = h / m;
        zoom[i] = z / m;
        sp[i] = s / m;
        det[i] = d / m;
        const StateId st = rec.rows[hi - 1].state;
        states += state_letter(st);
        seen.insert(st);
    }

    out << "t 0 s " << std::string(std::max(0, width - 12), '-') << " "
        << fmt(rec.rows.back().t_s) << " s\n";
    out << "state   " << states << "\n";
    out << "alt_m   " << sparkline(alt) << "\n";
    out << "horiz_m " << sparkline(horiz) << "\n";
    out << "zoom    " << sparkline(zoom) << "\n";
    out << "s_p_%   " << sparkline(sp) << "\n";
    out << "detect  " << sparkline(det) << "\n";
    out << "states:";
    for (StateId st : seen) out << " " << state_letter(st) << "=" << to_string(st);
    out << "\n";
    return out.str();
}

} // namespace fidland
