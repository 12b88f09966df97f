#include "fourwis/validate.hpp"

#include <cmath>
#include <cstdio>

namespace fourwis {

namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

double step_arc(const Waypoint& a, const Waypoint& b) {
    const double chord = std::hypot(b.x - a.x, b.y - a.y);
    const double alpha = std::abs(wrap_to_pi(b.theta - a.theta));
    if (alpha < 1e-9 || chord < 1e-12) return chord;
    return chord * (alpha / 2.0) / std::sin(alpha / 2.0);
}

}  // namespace

std::vector<CheckResult> validate_path(const PathFile& pf, const Scenario& scenario,
                                       const OccupancyGrid& grid) {
    std::vector<CheckResult> out;
    const RobotParams& params = scenario.params;
    const Footprint fp{params.half_length, params.half_width};
    const auto& records = pf.records;

    // collision and sample spacing
    {
        CheckResult c{"collision", true, "all waypoints collision-free"};
        const double max_step = collision_step(grid) + 1e-3;
        for (std::size_t i = 0; i < records.size(); ++i) {
            const Waypoint& w = records[i];
            if (!is_pose_free(grid, fp, {w.x, w.y, w.theta})) {
                c.pass = false;
                c.detail = fmt("waypoint %g in collision", static_cast<double>(i));
                break;
            }
            if (i > 0) {
                const double d = std::hypot(w.x - records[i - 1].x, w.y - records[i - 1].y);
                if (d > max_step) {
                    c.pass = false;
                    c.detail = fmt("sample spacing %.6f exceeds %.6f", d, max_step);
                    break;
                }
            }
        }
        out.push_back(c);
    }

    // per-mode curvature bound and parallel heading drift
    {
        CheckResult c{"kinematics", true, "curvature and heading drift within bounds"};
        constexpr double kZeroDisp = 1e-4;
        for (std::size_t i = 1; i < records.size() && c.pass; ++i) {
            const Waypoint& a = records[i - 1];
            const Waypoint& b = records[i];
            const double chord = std::hypot(b.x - a.x, b.y - a.y);
            if (chord <= kZeroDisp) continue;  // switch record
            if (b.mode == MotionMode::Parallel) {
                const double drift = std::abs(wrap_to_pi(b.theta - a.theta));
                if (drift > 1e-9) {
                    c.pass = false;
                    c.detail = fmt("parallel-mode heading drift %.3e", drift);
                }
            } else {
                const double arc = step_arc(a, b);
                const double kappa = std::abs(wrap_to_pi(b.theta - a.theta)) / arc;
                const double bound = max_curvature(params, b.mode) + 1e-3;
                if (kappa > bound) {
                    c.pass = false;
                    c.detail = fmt("curvature %.6f exceeds bound %.6f", kappa, bound);
                }
            }
        }
        out.push_back(c);
    }

    // cumulative length monotonicity
    {
        CheckResult c{"cumulative_length", true, "cumulative length is nondecreasing"};
        for (std::size_t i = 1; i < records.size(); ++i) {
            if (records[i].cum_length < records[i - 1].cum_length - 1e-9) {
                c.pass = false;
                c.detail = fmt("cum_length decreases at record %g",
                               static_cast<double>(i));
                break;
            }
        }
        out.push_back(c);
    }

    // cost replay
    const PathMetrics m = path_metrics(records, params, scenario.config, pf.tail_start);
    {
        CheckResult c{"cost_replay", true, ""};
        const double delta = std::abs(m.cost - pf.cost);
        c.pass = delta <= 1e-9;
        c.detail = c.pass ? fmt("replayed cost %.9f matches", m.cost)
                          : fmt("replayed cost differs by %.9f (replay %.9f)", delta, m.cost);
        out.push_back(c);
    }
    {
        CheckResult c{"length_replay", true, ""};
        const double delta = std::abs(m.length - pf.length);
        c.pass = delta <= 1e-9;
        c.detail = c.pass ? fmt("replayed length %.9f matches", m.length)
                          : fmt("replayed length differs by %.9f", delta);
        out.push_back(c);
    }

    // exact switch accounting
    {
        CheckResult c{"switch_accounting", true, ""};
        const double non_switch = m.length + m.steer_penalty + m.steer_change_penalty +
                                  m.reverse_penalty + m.direction_change_penalty;
        const double residual =
            std::abs((m.cost - non_switch) - params.switch_cost() * m.switch_count);
        c.pass = residual <= 1e-12 && m.switch_count == pf.switches;
        c.detail = c.pass ? fmt("%g switches at cost %.6f each",
                                static_cast<double>(m.switch_count), params.switch_cost())
                          : fmt("switch accounting residual %.3e (count %g)", residual,
                                static_cast<double>(m.switch_count));
        out.push_back(c);
    }

    return out;
}

}  // namespace fourwis
