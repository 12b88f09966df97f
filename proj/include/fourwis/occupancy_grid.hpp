#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourwis/geometry.hpp"

namespace fourwis {

/// Static boolean occupancy grid. Cell (0,0) has its lower-left corner at
/// `origin`; cell centers sit at origin + (i + 0.5) * resolution.
class OccupancyGrid {
public:
    OccupancyGrid() = default;
    OccupancyGrid(double resolution, Vec2 origin, int width, int height,
                  std::vector<bool> occupancy);

    /// Parses the plain-text map format:
    ///   resolution <r> origin <ox> <oy>
    /// followed by `height` rows of '#' (occupied) / '.' (free), the first
    /// text row being the row with the highest y.
    /// Throws std::runtime_error naming the offending line on malformed input.
    static OccupancyGrid parse(const std::string& text);
    static OccupancyGrid load(const std::string& path);

    /// Serializes back to the text format; parse(to_text()) round-trips.
    std::string to_text() const;

    double resolution() const { return resolution_; }
    Vec2 origin() const { return origin_; }
    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int ix, int iy) const {
        return ix >= 0 && ix < width_ && iy >= 0 && iy < height_;
    }
    bool occupied(int ix, int iy) const {
        return (words_[static_cast<std::size_t>(iy) * stride_ + (ix >> 6)] >>
                (ix & 63)) & 1u;
    }
    /// Packed occupancy row access for fast window scans.
    std::uint64_t word(int word_index, int iy) const {
        return words_[static_cast<std::size_t>(iy) * stride_ + word_index];
    }
    int word_stride() const { return stride_; }

    /// World extent of the map.
    double min_x() const { return origin_.x; }
    double min_y() const { return origin_.y; }
    double max_x() const { return origin_.x + width_ * resolution_; }
    double max_y() const { return origin_.y + height_ * resolution_; }

    bool point_in_bounds(double x, double y) const {
        return x >= min_x() && x <= max_x() && y >= min_y() && y <= max_y();
    }

    int cell_x(double x) const { return static_cast<int>(std::floor((x - origin_.x) / resolution_)); }
    int cell_y(double y) const { return static_cast<int>(std::floor((y - origin_.y) / resolution_)); }
    Vec2 cell_center(int ix, int iy) const {
        return {origin_.x + (ix + 0.5) * resolution_, origin_.y + (iy + 0.5) * resolution_};
    }

    std::size_t idx(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * width_ + ix;
    }
    std::size_t cell_count() const {
        return static_cast<std::size_t>(width_) * height_;
    }

private:
    double resolution_ = 1.0;
    Vec2 origin_{0.0, 0.0};
    int width_ = 0;
    int height_ = 0;
    int stride_ = 0;  // 64-bit words per row
    std::vector<std::uint64_t> words_;
};

/// Axis-aligned-with-heading rectangle occupied by the robot.
struct Footprint {
    double half_length = 0.50;  // along heading, m
    double half_width = 0.31;   // across heading, m
};

/// Conservative pose collision test: the footprint rectangle must lie inside
/// the map and every cell whose center falls within the rectangle inflated by
/// half a cell diagonal must be free.
bool is_pose_free(const OccupancyGrid& grid, const Footprint& fp, const Pose& pose);

/// True iff every sampled pose of a motion passes is_pose_free. Callers keep
/// consecutive samples within the collision sampling step (0.5 * resolution).
bool is_motion_free(const OccupancyGrid& grid, const Footprint& fp,
                    std::span<const Pose> poses);

/// Default spacing between collision samples along a motion.
inline double collision_step(const OccupancyGrid& grid) { return 0.5 * grid.resolution(); }

}  // namespace fourwis
