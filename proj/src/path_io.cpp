#include "fourwis/path_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fourwis {

namespace {

double quantize6(double v) {
    // match the %.6f record formatting
    return std::round(v * 1e6) / 1e6;
}

[[noreturn]] void path_fail(int line_no, const std::string& what) {
    throw std::runtime_error("path parse error at line " + std::to_string(line_no) + ": " +
                             what);
}

}  // namespace

PathFile make_path_file(const PlanResult& result, const std::string& label,
                        const RobotParams& params, const PlanConfig& cfg) {
    PathFile pf;
    pf.label = label;
    pf.tail_start = quantize6(result.tail_start_length);
    pf.records.reserve(result.waypoints.size());
    for (const Waypoint& w : result.waypoints) {
        Waypoint q = w;
        q.x = quantize6(w.x);
        q.y = quantize6(w.y);
        q.theta = quantize6(w.theta);
        q.cum_length = quantize6(w.cum_length);
        pf.records.push_back(q);
    }
    const PathMetrics m = path_metrics(pf.records, params, cfg, pf.tail_start);
    pf.length = m.length;
    pf.cost = m.cost;
    pf.switches = m.switch_count;
    return pf;
}

std::string path_file_to_text(const PathFile& pf) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# label: %s\n", pf.label.c_str());
    out += buf;
    std::snprintf(buf, sizeof(buf), "# length: %.12f\n", pf.length);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# cost: %.12f\n", pf.cost);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# switches: %d\n", pf.switches);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# tail_start: %.6f\n", pf.tail_start);
    out += buf;
    for (const Waypoint& w : pf.records) {
        std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %d %d %.6f\n", w.x, w.y, w.theta,
                      static_cast<int>(w.mode), w.gear, w.cum_length);
        out += buf;
    }
    return out;
}

PathFile parse_path_file(const std::string& text) {
    PathFile pf;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_cost = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream h(line.substr(1));
            std::string key;
            h >> key;
            if (key == "label:") {
                h >> std::ws;
                std::getline(h, pf.label);
            } else if (key == "length:") h >> pf.length;
            else if (key == "cost:") { h >> pf.cost; have_cost = true; }
            else if (key == "switches:") h >> pf.switches;
            else if (key == "tail_start:") h >> pf.tail_start;
            continue;
        }
        Waypoint w;
        int mode = 0;
        std::istringstream rec(line);
        rec >> w.x >> w.y >> w.theta >> mode >> w.gear >> w.cum_length;
        if (rec.fail() || mode < 1 || mode > 3 || (w.gear != 1 && w.gear != -1))
            path_fail(line_no, "expected 'x y theta mode gear cum_length'");
        w.mode = static_cast<MotionMode>(mode);
        pf.records.push_back(w);
    }
    if (pf.records.empty()) path_fail(line_no + 1, "no waypoint records");
    if (!have_cost) path_fail(line_no + 1, "missing '# cost:' header");
    return pf;
}

void write_path_file(const std::string& path, const PathFile& pf) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << path_file_to_text(pf);
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

PathFile load_path_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open path file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_path_file(buf.str());
}

}  // namespace fourwis
