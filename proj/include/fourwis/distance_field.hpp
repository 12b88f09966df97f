#pragma once

#include <limits>
#include <vector>

#include "fourwis/occupancy_grid.hpp"

namespace fourwis {

/// Per-cell shortest obstacle-aware path distance (m) to a goal cell,
/// computed by 8-connected Dijkstra over cells inflated by the footprint's
/// inscribed radius. Unreachable cells hold infinity.
class DistanceField {
public:
    static constexpr double kInfinity = std::numeric_limits<double>::infinity();

    DistanceField() = default;
    DistanceField(int width, int height, std::vector<double> values, int goal_x, int goal_y)
        : width_(width), height_(height), values_(std::move(values)),
          goal_x_(goal_x), goal_y_(goal_y) {}

    double at(int ix, int iy) const {
        if (ix < 0 || ix >= width_ || iy < 0 || iy >= height_) return kInfinity;
        return values_[static_cast<std::size_t>(iy) * width_ + ix];
    }
    int width() const { return width_; }
    int height() const { return height_; }
    int goal_x() const { return goal_x_; }
    int goal_y() const { return goal_y_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
    int goal_x_ = 0;
    int goal_y_ = 0;
};

/// Builds the field for the given goal cell. Cells whose center lies within
/// `inflation_radius` of an occupied cell are treated as occupied.
/// Throws std::invalid_argument if the goal cell is occupied (after inflation)
/// or out of bounds.
DistanceField build_distance_field(const OccupancyGrid& grid, int goal_x, int goal_y,
                                   double inflation_radius);

}  // namespace fourwis
