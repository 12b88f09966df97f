#pragma once

#include <span>
#include <string>

#include "fourwis/occupancy_grid.hpp"
#include "fourwis/planner.hpp"

namespace fourwis {

/// Renders a map and an optional path to SVG: obstacle cells, the path
/// polyline colored per mode, footprint outlines at regular intervals and a
/// marker at every mode switch.
std::string render_svg(const OccupancyGrid& grid, std::span<const Waypoint> path,
                       const Footprint& fp);

void write_svg(const std::string& path, const std::string& svg);

}  // namespace fourwis
