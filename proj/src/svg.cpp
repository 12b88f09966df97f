#include "fourwis/svg.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fourwis {

namespace {

const char* mode_color(MotionMode m) {
    switch (m) {
        case MotionMode::Ackermann: return "#1f6fb2";
        case MotionMode::Lateral: return "#d9662a";
        case MotionMode::Parallel: return "#2c8f4e";
    }
    return "#000000";
}

void appendf(std::string& out, const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    out += buf;
}

}  // namespace

std::string render_svg(const OccupancyGrid& grid, std::span<const Waypoint> path,
                       const Footprint& fp) {
    const double scale = 40.0;  // px per meter
    const double w = (grid.max_x() - grid.min_x()) * scale;
    const double h = (grid.max_y() - grid.min_y()) * scale;
    auto px = [&](double x) { return (x - grid.min_x()) * scale; };
    auto py = [&](double y) { return h - (y - grid.min_y()) * scale; };  // y up

    std::string svg;
    appendf(svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
            "viewBox=\"0 0 %.0f %.0f\">\n",
            w, h, w, h);
    appendf(svg, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"#fafafa\"/>\n", w, h);

    // obstacles, merged per row for compactness
    const double cell = grid.resolution() * scale;
    for (int iy = 0; iy < grid.height(); ++iy) {
        int run = -1;
        for (int ix = 0; ix <= grid.width(); ++ix) {
            const bool occ = ix < grid.width() && grid.occupied(ix, iy);
            if (occ && run < 0) run = ix;
            if (!occ && run >= 0) {
                appendf(svg,
                        "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                        "fill=\"#404040\"/>\n",
                        run * cell, h - (iy + 1) * cell, (ix - run) * cell, cell);
                run = -1;
            }
        }
    }

    if (!path.empty()) {
        // footprint outlines at intervals
        const std::size_t stride = std::max<std::size_t>(1, path.size() / 40);
        for (std::size_t i = 0; i < path.size(); i += stride) {
            const Waypoint& wp = path[i];
            const double c = std::cos(wp.theta), s = std::sin(wp.theta);
            appendf(svg, "<polygon points=\"");
            for (auto [sl, sw] : {std::pair{1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}, {-1.0, 1.0}}) {
                const double x = wp.x + sl * fp.half_length * c - sw * fp.half_width * s;
                const double y = wp.y + sl * fp.half_length * s + sw * fp.half_width * c;
                appendf(svg, "%.2f,%.2f ", px(x), py(y));
            }
            appendf(svg, "\" fill=\"none\" stroke=\"%s\" stroke-opacity=\"0.25\" "
                         "stroke-width=\"1\"/>\n",
                    mode_color(wp.mode));
        }

        // path polyline, one segment per mode run
        std::size_t i = 1;
        while (i < path.size()) {
            const MotionMode m = path[i].mode;
            appendf(svg, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"2\" points=\"",
                    mode_color(m));
            appendf(svg, "%.2f,%.2f ", px(path[i - 1].x), py(path[i - 1].y));
            while (i < path.size() && path[i].mode == m) {
                appendf(svg, "%.2f,%.2f ", px(path[i].x), py(path[i].y));
                ++i;
            }
            svg += "\"/>\n";
        }

        // switch markers: zero-displacement records with a mode change
        for (std::size_t k = 1; k < path.size(); ++k) {
            const double d = std::hypot(path[k].x - path[k - 1].x, path[k].y - path[k - 1].y);
            if (d <= 1e-4 && path[k].mode != path[k - 1].mode) {
                appendf(svg,
                        "<circle class=\"switch-marker\" cx=\"%.2f\" cy=\"%.2f\" r=\"5\" "
                        "fill=\"#c02040\" fill-opacity=\"0.8\"/>\n",
                        px(path[k].x), py(path[k].y));
            }
        }

        // start / goal markers
        appendf(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#202020\"/>\n",
                px(path.front().x), py(path.front().y));
        appendf(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"none\" "
                     "stroke=\"#202020\" stroke-width=\"2\"/>\n",
                px(path.back().x), py(path.back().y));
    }

    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << svg;
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace fourwis
