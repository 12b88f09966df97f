#include "fourwis/occupancy_grid.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fourwis {

OccupancyGrid::OccupancyGrid(double resolution, Vec2 origin, int width, int height,
                             std::vector<bool> occupancy)
    : resolution_(resolution), origin_(origin), width_(width), height_(height),
      stride_((width + 63) / 64) {
    if (resolution_ <= 0.0) throw std::invalid_argument("grid resolution must be positive");
    if (width_ < 1 || height_ < 1) throw std::invalid_argument("grid must be at least 1x1");
    if (occupancy.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("occupancy size does not match grid dimensions");
    words_.assign(static_cast<std::size_t>(stride_) * height_, 0);
    for (int iy = 0; iy < height_; ++iy)
        for (int ix = 0; ix < width_; ++ix)
            if (occupancy[static_cast<std::size_t>(iy) * width_ + ix])
                words_[static_cast<std::size_t>(iy) * stride_ + (ix >> 6)] |=
                    std::uint64_t{1} << (ix & 63);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("map parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

OccupancyGrid OccupancyGrid::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) parse_fail(1, "missing header");
    ++line_no;
    std::istringstream header(line);
    std::string kw_res, kw_origin;
    double res = 0.0, ox = 0.0, oy = 0.0;
    header >> kw_res >> res >> kw_origin >> ox >> oy;
    if (header.fail() || kw_res != "resolution" || kw_origin != "origin")
        parse_fail(line_no, "expected 'resolution <r> origin <ox> <oy>'");
    if (res <= 0.0) parse_fail(line_no, "resolution must be positive");

    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!rows.empty() && line.size() != rows.front().size())
            parse_fail(line_no, "ragged row (expected width " +
                                    std::to_string(rows.front().size()) + ")");
        for (char c : line)
            if (c != '#' && c != '.')
                parse_fail(line_no, std::string("illegal character '") + c + "'");
        rows.push_back(line);
    }
    if (rows.empty()) parse_fail(line_no + 1, "map has no rows");

    const int width = static_cast<int>(rows.front().size());
    const int height = static_cast<int>(rows.size());
    std::vector<bool> occ(static_cast<std::size_t>(width) * height, false);
    // First text row is the highest-y row.
    for (int r = 0; r < height; ++r) {
        const int iy = height - 1 - r;
        for (int ix = 0; ix < width; ++ix)
            occ[static_cast<std::size_t>(iy) * width + ix] = rows[r][ix] == '#';
    }
    return OccupancyGrid(res, {ox, oy}, width, height, std::move(occ));
}

OccupancyGrid OccupancyGrid::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string OccupancyGrid::to_text() const {
    char header[128];
    std::snprintf(header, sizeof(header), "resolution %.6f origin %.6f %.6f\n",
                  resolution_, origin_.x, origin_.y);
    std::string out(header);
    out.reserve(out.size() + static_cast<std::size_t>(height_) * (width_ + 1));
    for (int iy = height_ - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < width_; ++ix) out.push_back(occupied(ix, iy) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

bool is_pose_free(const OccupancyGrid& grid, const Footprint& fp, const Pose& pose) {
    const Vec2 fwd{std::cos(pose.theta), std::sin(pose.theta)};
    const Vec2 left{-fwd.y, fwd.x};

    // The exact rectangle must lie inside the map.
    for (double sl : {-1.0, 1.0}) {
        for (double sw : {-1.0, 1.0}) {
            const Vec2 corner{pose.x + sl * fp.half_length * fwd.x + sw * fp.half_width * left.x,
                              pose.y + sl * fp.half_length * fwd.y + sw * fp.half_width * left.y};
            if (!grid.point_in_bounds(corner.x, corner.y)) return false;
        }
    }

    const double inflate = 0.5 * grid.resolution() * std::sqrt(2.0);
    const double rl = fp.half_length + inflate;
    const double rw = fp.half_width + inflate;

    // AABB of the inflated rectangle in cell indices.
    const double reach = std::hypot(rl, rw);
    const int x0 = std::max(0, grid.cell_x(pose.x - reach));
    const int x1 = std::min(grid.width() - 1, grid.cell_x(pose.x + reach));
    const int y0 = std::max(0, grid.cell_y(pose.y - reach));
    const int y1 = std::min(grid.height() - 1, grid.cell_y(pose.y + reach));

    // scan packed occupancy words, testing only set bits
    const int w0 = x0 >> 6, w1 = x1 >> 6;
    for (int iy = y0; iy <= y1; ++iy) {
        for (int wb = w0; wb <= w1; ++wb) {
            std::uint64_t bits = grid.word(wb, iy);
            if (wb == w0) bits &= ~std::uint64_t{0} << (x0 & 63);
            if (wb == w1 && (x1 & 63) != 63) bits &= (std::uint64_t{1} << ((x1 & 63) + 1)) - 1;
            while (bits) {
                const int ix = (wb << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                const Vec2 d = grid.cell_center(ix, iy) - Vec2{pose.x, pose.y};
                if (std::abs(d.dot(fwd)) <= rl && std::abs(d.dot(left)) <= rw) return false;
            }
        }
    }
    return true;
}

bool is_motion_free(const OccupancyGrid& grid, const Footprint& fp,
                    std::span<const Pose> poses) {
    return std::all_of(poses.begin(), poses.end(),
                       [&](const Pose& p) { return is_pose_free(grid, fp, p); });
}

}  // namespace fourwis
