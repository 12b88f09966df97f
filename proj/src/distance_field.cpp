#include "fourwis/distance_field.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace fourwis {

namespace {

/// Distance from a point to an axis-aligned square cell (0 inside).
double point_to_cell_distance(const Vec2& p, const Vec2& cell_center, double half) {
    const double dx = std::max(std::abs(p.x - cell_center.x) - half, 0.0);
    const double dy = std::max(std::abs(p.y - cell_center.y) - half, 0.0);
    return std::hypot(dx, dy);
}

std::vector<bool> inflate(const OccupancyGrid& grid, double radius) {
    std::vector<bool> blocked(grid.cell_count(), false);
    const double res = grid.resolution();
    const double half = 0.5 * res;
    const int win = static_cast<int>(std::ceil((radius + half * std::sqrt(2.0)) / res)) + 1;
    for (int iy = 0; iy < grid.height(); ++iy) {
        for (int ix = 0; ix < grid.width(); ++ix) {
            if (!grid.occupied(ix, iy)) continue;
            blocked[grid.idx(ix, iy)] = true;
            const Vec2 c = grid.cell_center(ix, iy);
            for (int dy = -win; dy <= win; ++dy) {
                for (int dx = -win; dx <= win; ++dx) {
                    const int nx = ix + dx, ny = iy + dy;
                    if (!grid.in_bounds(nx, ny) || blocked[grid.idx(nx, ny)]) continue;
                    if (point_to_cell_distance(grid.cell_center(nx, ny), c, half) <= radius)
                        blocked[grid.idx(nx, ny)] = true;
                }
            }
        }
    }
    return blocked;
}

}  // namespace

DistanceField build_distance_field(const OccupancyGrid& grid, int goal_x, int goal_y,
                                   double inflation_radius) {
    if (!grid.in_bounds(goal_x, goal_y))
        throw std::invalid_argument("distance field goal cell out of bounds");

    const std::vector<bool> blocked = inflate(grid, inflation_radius);
    if (blocked[grid.idx(goal_x, goal_y)])
        throw std::invalid_argument("distance field goal cell is occupied");

    std::vector<double> dist(grid.cell_count(), DistanceField::kInfinity);
    using Entry = std::pair<double, std::size_t>;  // (distance, cell index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    dist[grid.idx(goal_x, goal_y)] = 0.0;
    open.emplace(0.0, grid.idx(goal_x, goal_y));

    const double res = grid.resolution();
    const double diag = res * std::sqrt(2.0);
    static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

    while (!open.empty()) {
        const auto [d, i] = open.top();
        open.pop();
        if (d > dist[i]) continue;  // stale entry
        const int ix = static_cast<int>(i % grid.width());
        const int iy = static_cast<int>(i / grid.width());
        for (int k = 0; k < 8; ++k) {
            const int nx = ix + kDx[k], ny = iy + kDy[k];
            if (!grid.in_bounds(nx, ny)) continue;
            const std::size_t ni = grid.idx(nx, ny);
            if (blocked[ni]) continue;
            const double nd = d + (k < 4 ? res : diag);
            if (nd < dist[ni]) {
                dist[ni] = nd;
                open.emplace(nd, ni);
            }
        }
    }
    return DistanceField(grid.width(), grid.height(), std::move(dist), goal_x, goal_y);
}

}  // namespace fourwis
