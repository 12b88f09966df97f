#pragma once

#include <string>

#include "fourwis/planner.hpp"

namespace fourwis {

/// One planning task: a map reference, robot/planner parameters with
/// defaults, start state and goal pose. Parsed from a flat key-value file
/// (one `key: value` per line, '#' comments).
struct Scenario {
    std::string label;
    std::string map_path;  // resolved against the scenario file's directory
    RobotParams params;
    PlanConfig config;
    State4D start;
    Pose goal;
};

/// Loads and validates a scenario file. Throws std::runtime_error naming the
/// offending line on malformed input.
Scenario load_scenario(const std::string& path);

/// Parses scenario text; `base_dir` resolves the map path.
Scenario parse_scenario(const std::string& text, const std::string& base_dir);

}  // namespace fourwis
