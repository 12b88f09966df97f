#pragma once

#include <string>
#include <vector>

#include "fourwis/path_io.hpp"
#include "fourwis/scenario.hpp"

namespace fourwis {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Replays a path file against its scenario: footprint collision and sample
/// spacing, per-mode curvature bounds, parallel-mode heading drift, cumulative
/// length monotonicity, and the accumulated-cost replay including exact
/// switch accounting.
std::vector<CheckResult> validate_path(const PathFile& pf, const Scenario& scenario,
                                       const OccupancyGrid& grid);

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace fourwis
