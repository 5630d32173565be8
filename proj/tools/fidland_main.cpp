#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fidland/config.hpp"
#include "fidland/plot.hpp"
#include "fidland/runner.hpp"
#include "fidland/scenario.hpp"
#include "fidland/telemetry.hpp"

namespace fs = std::filesystem;
using namespace fidland;

namespace {

void print_stats_line(const char* label, const TypeStats& st) {
    if (st.n == 0) return;
    std::printf("  %-10s n=%-4d mean=%.3f m  stddev=%.3f m  max=%.3f m\n",
                label, st.n, st.mean_error_m, st.stddev_error_m, st.max_error_m);
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed,
            const std::string& out_dir, const std::string& format) {
    Scenario sc = load_scenario_file(scenario_path, config_from_env());
    if (seed) sc.seed = *seed;

    const RunRecord rec = run_scenario(sc);

    fs::create_directories(out_dir);
    const fs::path out =
        fs::path(out_dir) / (rec.scenario_name + (format == "json" ? ".json" : ".csv"));
    if (format == "json") {
        write_json_file(rec, out.string());
    } else {
        write_csv_file(rec, out.string());
    }

    std::printf("%s: %s", rec.scenario_name.c_str(), to_string(rec.outcome));
    if (rec.outcome == Outcome::Landed) {
        std::printf(", touchdown error %.3f m", rec.touchdown_error_m);
    }
    std::printf(", %.1f s simulated\n", rec.duration_s);
    std::printf("telemetry: %s\n", out.string().c_str());
    return rec.outcome == Outcome::Landed ? 0 : 2;
}

int cmd_batch(const std::string& dir, const std::string& summary_path, int jobs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::fprintf(stderr, "no .json scenarios under %s\n", dir.c_str());
        return 1;
    }

    const SimConfig base = config_from_env();
    std::vector<Scenario> scenarios;
    scenarios.reserve(files.size());
    for (const fs::path& f : files) {
        scenarios.push_back(load_scenario_file(f.string(), base));
    }

    const std::vector<RunRecord> records = run_batch(scenarios, jobs);
    const BatchSummary summary = summarize(records);

    for (const RunRecord& r : records) {
        std::printf("%-32s %-10s %s", r.scenario_name.c_str(),
                    to_string(r.pad_type), to_string(r.outcome));
        if (r.outcome == Outcome::Landed) {
            std::printf("  error %.3f m", r.touchdown_error_m);
        }
        std::printf("\n");
    }
    std::printf("landed %d/%d\n", summary.landed, summary.total_runs);
    print_stats_line("visual", summary.visual);
    print_stats_line("active_ir", summary.active_ir);
    print_stats_line("passive_ir", summary.passive_ir);
    print_stats_line("overall", summary.overall);
    for (const std::string& note : summary.notes) {
        std::printf("note: %s\n", note.c_str());
    }

    if (!summary_path.empty()) {
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + summary_path);
        out << to_json(summary).dump(2) << "\n";
        std::printf("summary: %s\n", summary_path.c_str());
    }
    return 0;
}

int cmd_plot(const std::string& record_path, const std::string& out_path,
             int width) {
    const RunRecord rec = read_csv_file(record_path);
    const std::string text = render_timeline(rec, width);
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
        std::printf("plot: %s\n", out_path.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fiducial landing simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate one scenario file");
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::string format = "csv";
    run->add_option("--scenario", scenario_path, "scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--out", out_dir, "output directory (default .)");
    run->add_option("--format", format, "telemetry format")
        ->check(CLI::IsMember({"csv", "json"}));

    // batch
    auto* batch = app.add_subcommand("batch", "run every scenario in a directory");
    std::string batch_dir;
    std::string summary_path;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    batch->add_option("--dir", batch_dir, "directory of scenario JSON files")
        ->required()
        ->check(CLI::ExistingDirectory);
    batch->add_option("--summary", summary_path, "write summary JSON here");
    batch->add_option("--jobs", jobs, "parallel runs")->check(CLI::PositiveNumber);

    // plot
    auto* plot = app.add_subcommand("plot", "render a telemetry CSV as text");
    std::string record_path;
    std::string plot_out;
    int width = 100;
    plot->add_option("--record", record_path, "telemetry CSV from run")
        ->required()
        ->check(CLI::ExistingFile);
    plot->add_option("--out", plot_out, "output file (default stdout)");
    plot->add_option("--width", width, "columns")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(scenario_path, seed, out_dir, format);
        if (batch->parsed()) return cmd_batch(batch_dir, summary_path, jobs);
        if (plot->parsed()) return cmd_plot(record_path, plot_out, width);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
