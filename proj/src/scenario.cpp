#include "fourwis/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fourwis {

namespace {

[[noreturn]] void scenario_fail(int line_no, const std::string& what) {
    throw std::runtime_error("scenario parse error at line " + std::to_string(line_no) +
                             ": " + what);
}

MotionMode parse_mode(int v, int line_no) {
    if (v < 1 || v > 3) scenario_fail(line_no, "mode must be 1, 2 or 3");
    return static_cast<MotionMode>(v);
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
    Scenario s;
    bool have_map = false, have_start = false, have_goal = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        const auto colon = line.find(':');
        if (colon == std::string::npos) scenario_fail(line_no, "expected 'key: value'");
        const std::string key = line.substr(0, colon);
        std::istringstream val(line.substr(colon + 1));

        auto num = [&](double& out) {
            val >> out;
            if (val.fail()) scenario_fail(line_no, "bad numeric value for '" + key + "'");
        };
        auto integer = [&](auto& out) {
            long long v = 0;
            val >> v;
            if (val.fail()) scenario_fail(line_no, "bad integer value for '" + key + "'");
            out = static_cast<std::remove_reference_t<decltype(out)>>(v);
        };

        if (key == "label") {
            val >> std::ws;
            std::getline(val, s.label);
        } else if (key == "map") {
            std::string rel;
            val >> rel;
            if (rel.empty()) scenario_fail(line_no, "empty map path");
            s.map_path = (std::filesystem::path(base_dir) / rel).lexically_normal().string();
            have_map = true;
        } else if (key == "start") {
            double x, y, th;
            int mode;
            val >> x >> y >> th >> mode;
            if (val.fail()) scenario_fail(line_no, "start needs 'x y theta mode'");
            s.start = {x, y, wrap_to_2pi(th), parse_mode(mode, line_no)};
            have_start = true;
        } else if (key == "goal") {
            double x, y, th;
            val >> x >> y >> th;
            if (val.fail()) scenario_fail(line_no, "goal needs 'x y theta'");
            s.goal = {x, y, wrap_to_2pi(th)};
            have_goal = true;
        } else if (key == "modes") {
            s.config.modes.clear();
            int m;
            while (val >> m) s.config.modes.push_back(parse_mode(m, line_no));
            if (s.config.modes.empty()) scenario_fail(line_no, "empty mode set");
        } else if (key == "half_length") num(s.params.half_length);
        else if (key == "half_width") num(s.params.half_width);
        else if (key == "wheelbase") num(s.params.wheelbase);
        else if (key == "track_width") num(s.params.track_width);
        else if (key == "max_steer") num(s.params.max_steer);
        else if (key == "max_steer_rate") num(s.params.max_steer_rate);
        else if (key == "wheel_radius") num(s.params.wheel_radius);
        else if (key == "v_ref") num(s.params.v_ref);
        else if (key == "dt") num(s.params.dt);
        else if (key == "t_switch") num(s.params.t_switch);
        else if (key == "c_reverse") num(s.config.c_reverse);
        else if (key == "c_steer") num(s.config.c_steer);
        else if (key == "c_steer_change") num(s.config.c_steer_change);
        else if (key == "c_direction_change") num(s.config.c_direction_change);
        else if (key == "n_steer") integer(s.config.n_steer);
        else if (key == "n_parallel_dirs") integer(s.config.n_parallel_dirs);
        else if (key == "n_theta") integer(s.config.n_theta);
        else if (key == "r_connect") num(s.config.r_connect);
        else if (key == "eps_parallel") num(s.config.eps_parallel);
        else if (key == "max_expansions") integer(s.config.max_expansions);
        else scenario_fail(line_no, "unknown key '" + key + "'");
    }

    if (!have_map) scenario_fail(line_no + 1, "missing 'map'");
    if (!have_start) scenario_fail(line_no + 1, "missing 'start'");
    if (!have_goal) scenario_fail(line_no + 1, "missing 'goal'");
    s.config.eps_parallel = std::max(s.config.eps_parallel, 0.0);
    try {
        s.params.validate();
        s.config.validate();
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("scenario invalid: ") + ex.what());
    }
    if (!s.config.has_mode(s.start.mode))
        throw std::runtime_error("scenario invalid: start mode not in mode set");
    if (s.label.empty()) s.label = "unnamed";
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace fourwis
