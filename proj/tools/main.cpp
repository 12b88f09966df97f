#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fourwis/path_io.hpp"
#include "fourwis/scenario.hpp"
#include "fourwis/svg.hpp"
#include "fourwis/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPlanFailure = 3;
constexpr int kExitWrite = 4;

using namespace fourwis;

void force_baseline(Scenario& s) {
    s.config.modes = {MotionMode::Ackermann};
    s.start.mode = MotionMode::Ackermann;
}

struct RunOutput {
    PlanOutcome outcome;
    PathFile file;  // valid when outcome.ok()
};

RunOutput run_scenario(const Scenario& s, const OccupancyGrid& grid,
                       const std::string& algorithm_label) {
    RunOutput r;
    r.outcome = plan(grid, s.params, s.config, s.start, s.goal);
    if (r.outcome.ok())
        r.file = make_path_file(*r.outcome.result, algorithm_label, s.params, s.config);
    return r;
}

int cmd_plan(const std::string& scenario_path, const std::string& output_path,
             bool baseline) {
    Scenario s;
    OccupancyGrid grid;
    try {
        s = load_scenario(scenario_path);
        grid = OccupancyGrid::load(s.map_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    if (baseline) force_baseline(s);

    const RunOutput r = run_scenario(s, grid, s.label);
    std::printf("label: %s\n", s.label.c_str());
    std::printf("status: %s\n", plan_status_name(r.outcome.status));
    if (!r.outcome.ok()) {
        if (r.outcome.status == PlanStatus::GoalUnreachable)
            std::cerr << "error: goal unreachable from start\n";
        else
            std::cerr << "error: planning failed (" << plan_status_name(r.outcome.status)
                      << ")\n";
        return kExitPlanFailure;
    }
    std::printf("length: %.12f\n", r.file.length);
    std::printf("cost: %.12f\n", r.file.cost);
    std::printf("switches: %d\n", r.file.switches);
    std::printf("expansions: %lld\n",
                static_cast<long long>(r.outcome.result->stats.expansions));
    std::printf("analytic_attempts: %lld\n",
                static_cast<long long>(r.outcome.result->stats.analytic_attempts));
    std::printf("runtime_ms: %.3f\n", r.outcome.result->stats.wall_ms);
    try {
        write_path_file(output_path, r.file);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitWrite;
    }
    return kExitOk;
}

struct BenchRow {
    std::string scenario;
    std::string algorithm;
    bool ok = false;
    double length = 0.0;
    double cost = 0.0;
    int switches = 0;
    long long expansions = 0;
    double runtime_ms = 0.0;
    std::string status;
};

BenchRow bench_one(const Scenario& base, const OccupancyGrid& grid, bool baseline) {
    Scenario s = base;
    if (baseline) force_baseline(s);
    BenchRow row;
    row.scenario = s.label;
    row.algorithm = baseline ? "hybrid_astar" : "multimodal_hybrid_astar";
    const RunOutput r = run_scenario(s, grid, s.label);
    row.status = plan_status_name(r.outcome.status);
    row.expansions = r.outcome.stats.expansions;
    row.runtime_ms = r.outcome.stats.wall_ms;
    if (r.outcome.ok()) {
        row.ok = true;
        row.length = r.file.length;
        row.cost = r.file.cost;
        row.switches = r.file.switches;
    }
    return row;
}

int cmd_bench(const std::string& scenario_dir, const std::string& output_csv, int jobs,
              bool stable) {
    std::vector<std::string> files;
    try {
        for (const auto& entry : std::filesystem::directory_iterator(scenario_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".scn")
                files.push_back(entry.path().string());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    if (files.empty()) {
        std::cerr << "error: no .scn scenarios in " << scenario_dir << "\n";
        return kExitParse;
    }
    std::sort(files.begin(), files.end());

    struct Task {
        Scenario scenario;
        OccupancyGrid grid;
        bool baseline;
    };
    std::vector<Task> tasks;
    for (const std::string& f : files) {
        try {
            Scenario s = load_scenario(f);
            OccupancyGrid grid = OccupancyGrid::load(s.map_path);
            tasks.push_back({s, grid, true});
            tasks.push_back({std::move(s), std::move(grid), false});
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitParse;
        }
    }

    std::vector<BenchRow> rows(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            rows[i] = bench_one(tasks[i].scenario, tasks[i].grid, tasks[i].baseline);
    } else {
        std::vector<std::future<BenchRow>> futures;
        futures.reserve(tasks.size());
        std::size_t next = 0;
        while (next < tasks.size() || !futures.empty()) {
            while (next < tasks.size() &&
                   futures.size() < static_cast<std::size_t>(jobs)) {
                const std::size_t i = next++;
                futures.push_back(std::async(std::launch::async, [&tasks, i] {
                    return bench_one(tasks[i].scenario, tasks[i].grid, tasks[i].baseline);
                }));
            }
            const std::size_t i = next - futures.size();
            rows[i] = futures.front().get();
            futures.erase(futures.begin());
        }
    }

    std::string csv = "scenario,algorithm,path_length_m,path_cost,switches,expansions,"
                      "runtime_ms,status\n";
    char buf[512];
    for (const BenchRow& r : rows) {
        const double rt = stable ? 0.0 : r.runtime_ms;
        if (r.ok) {
            std::snprintf(buf, sizeof(buf), "%s,%s,%.12f,%.12f,%d,%lld,%.3f,%s\n",
                          r.scenario.c_str(), r.algorithm.c_str(), r.length, r.cost,
                          r.switches, r.expansions, rt, r.status.c_str());
        } else {
            std::snprintf(buf, sizeof(buf), "%s,%s,,,,%lld,%.3f,%s\n", r.scenario.c_str(),
                          r.algorithm.c_str(), r.expansions, rt, r.status.c_str());
        }
        csv += buf;
    }
    try {
        std::ofstream out(output_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + output_csv);
        out << csv;
        if (!out.good()) throw std::runtime_error("failed writing " + output_csv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitWrite;
    }
    std::fputs(csv.c_str(), stdout);
    return kExitOk;
}

int cmd_render(const std::string& path_file, const std::string& map_file,
               const std::string& output_svg) {
    PathFile pf;
    OccupancyGrid grid;
    try {
        pf = load_path_file(path_file);
        grid = OccupancyGrid::load(map_file);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    try {
        write_svg(output_svg, render_svg(grid, pf.records, Footprint{}));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitWrite;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path_file, const std::string& scenario_path) {
    PathFile pf;
    Scenario s;
    OccupancyGrid grid;
    try {
        pf = load_path_file(path_file);
        s = load_scenario(scenario_path);
        grid = OccupancyGrid::load(s.map_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    }
    const auto checks = validate_path(pf, s, grid);
    for (const auto& c : checks)
        std::printf("%s %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-modal Hybrid A* planner for four-wheel independent steering robots"};
    app.require_subcommand(1);

    std::string scenario_path, output_path, scenario_dir, csv_path, path_file, map_file,
        svg_path;
    bool baseline = false, stable = false;
    int jobs = 1;

    auto* plan_cmd = app.add_subcommand("plan", "Plan one scenario and write the path file");
    plan_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    plan_cmd->add_option("output", output_path, "Output path file")->required();
    plan_cmd->add_flag("--baseline", baseline, "Restrict to Ackermann mode only");

    auto* bench_cmd =
        app.add_subcommand("bench", "Run every scenario in a directory, baseline vs multi-modal");
    bench_cmd->add_option("scenario_dir", scenario_dir, "Directory of .scn files")->required();
    bench_cmd->add_option("output", csv_path, "Output CSV")->required();
    bench_cmd->add_option("--jobs", jobs, "Concurrent scenario queries")->default_val(1);
    bench_cmd->add_flag("--stable", stable, "Write runtime_ms as 0 for byte-stable output");

    auto* render_cmd = app.add_subcommand("render", "Render a path file to SVG");
    render_cmd->add_option("path", path_file, "Path file")->required();
    render_cmd->add_option("map", map_file, "Map file")->required();
    render_cmd->add_option("output", svg_path, "Output SVG")->required();

    auto* validate_cmd =
        app.add_subcommand("validate", "Replay a path file against its scenario");
    validate_cmd->add_option("path", path_file, "Path file")->required();
    validate_cmd->add_option("scenario", scenario_path, "Scenario file")->required();

    CLI11_PARSE(app, argc, argv);

    if (plan_cmd->parsed()) return cmd_plan(scenario_path, output_path, baseline);
    if (bench_cmd->parsed()) return cmd_bench(scenario_dir, csv_path, jobs, stable);
    if (render_cmd->parsed()) return cmd_render(path_file, map_file, svg_path);
    if (validate_cmd->parsed()) return cmd_validate(path_file, scenario_path);
    return kExitParse;
}
