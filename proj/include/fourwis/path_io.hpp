#pragma once

#include <string>
#include <vector>

#include "fourwis/planner.hpp"

namespace fourwis {

/// On-disk form of a planned path: '#'-prefixed header lines with the
/// replayable totals, then one waypoint record per line,
/// `x y theta mode gear cum_length` with six fixed decimals.
struct PathFile {
    std::string label;
    double length = 0.0;      // recomputed over the written (quantized) records
    double cost = 0.0;
    int switches = 0;
    double tail_start = 0.0;  // cumulative length where the analytic tail begins
    std::vector<Waypoint> records;
};

/// Quantizes the result to the record precision and recomputes the header
/// totals over the quantized stream, so a later replay reproduces them
/// exactly.
PathFile make_path_file(const PlanResult& result, const std::string& label,
                        const RobotParams& params, const PlanConfig& cfg);

std::string path_file_to_text(const PathFile& pf);
PathFile parse_path_file(const std::string& text);

void write_path_file(const std::string& path, const PathFile& pf);
PathFile load_path_file(const std::string& path);

}  // namespace fourwis
