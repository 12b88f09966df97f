#include "fourwis/planner.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace fourwis {

bool PlanConfig::has_mode(MotionMode m) const {
    return std::find(modes.begin(), modes.end(), m) != modes.end();
}

std::vector<double> PlanConfig::steer_samples(const RobotParams& params) const {
    std::vector<double> out;
    out.reserve(n_steer);
    for (int j = 0; j < n_steer; ++j)
        out.push_back(-params.max_steer + 2.0 * params.max_steer * j / (n_steer - 1));
    return out;
}

std::vector<double> PlanConfig::parallel_directions() const {
    std::vector<double> out;
    out.reserve(n_parallel_dirs);
    for (int k = 0; k < n_parallel_dirs; ++k)
        out.push_back(wrap_to_pi(2.0 * M_PI * k / n_parallel_dirs));
    return out;
}

void PlanConfig::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (c_reverse < 0.0 || c_steer < 0.0 || c_steer_change < 0.0 || c_direction_change < 0.0)
        fail("penalties must be nonnegative");
    if (n_steer < 3 || n_steer % 2 == 0) fail("n_steer must be odd and >= 3");
    if (n_parallel_dirs < 1) fail("n_parallel_dirs must be >= 1");
    if (n_theta < 8) fail("n_theta must be >= 8");
    if (r_connect <= 0.0) fail("r_connect must be positive");
    if (eps_parallel < 0.0) fail("eps_parallel must be nonnegative");
    if (modes.empty()) fail("mode set must be nonempty");
    if (max_expansions < 1) fail("max_expansions must be >= 1");
}

const char* plan_status_name(PlanStatus s) {
    switch (s) {
        case PlanStatus::Success: return "success";
        case PlanStatus::StartInCollision: return "start_in_collision";
        case PlanStatus::GoalInCollision: return "goal_in_collision";
        case PlanStatus::GoalUnreachable: return "goal_unreachable";
        case PlanStatus::NoPath: return "no_path";
        case PlanStatus::IterationLimit: return "iteration_limit";
    }
    return "unknown";
}

DiscreteKey discretize(const State4D& state, const PlanConfig& cfg,
                       const OccupancyGrid& grid) {
    const int ix = grid.cell_x(state.x);
    const int iy = grid.cell_y(state.y);
    if (!grid.in_bounds(ix, iy)) throw std::out_of_range("state outside the map");
    int itheta = static_cast<int>(std::floor(wrap_to_2pi(state.theta) * cfg.n_theta /
                                             (2.0 * M_PI)));
    itheta = std::clamp(itheta, 0, cfg.n_theta - 1);
    return {ix, iy, itheta, state.mode};
}

namespace {

/// Signed curvature of a steering sample in an arc mode.
double mode_curvature(MotionMode mode, double delta, const RobotParams& params) {
    const double axis =
        (mode == MotionMode::Ackermann) ? params.wheelbase : params.track_width;
    return 2.0 * std::tan(delta) / axis;
}

/// Pose after traveling unsigned arc length `u` of a primitive.
Pose primitive_pose(const State4D& from, MotionMode mode, double delta, int gear,
                    double u, const RobotParams& params) {
    if (mode == MotionMode::Parallel) {
        const double heading = from.theta + delta;  // delta holds the direction phi
        return {from.x + u * std::cos(heading), from.y + u * std::sin(heading),
                from.theta};
    }
    const double kappa = mode_curvature(mode, delta, params);
    const double travel0 =
        (mode == MotionMode::Lateral) ? from.theta - M_PI / 2.0 : from.theta;
    if (std::abs(kappa) < 1e-12) {
        return {from.x + gear * u * std::cos(travel0), from.y + gear * u * std::sin(travel0),
                from.theta};
    }
    const double travel1 = travel0 + gear * kappa * u;
    return {from.x + (std::sin(travel1) - std::sin(travel0)) / kappa,
            from.y - (std::cos(travel1) - std::cos(travel0)) / kappa,
            wrap_to_2pi(from.theta + gear * kappa * u)};
}

}  // namespace

std::vector<Successor> expand_intra(const State4D& state, const PlanConfig& cfg,
                                    const RobotParams& params) {
    std::vector<Successor> out;
    const double ds = params.step_length();
    if (state.mode == MotionMode::Parallel) {
        out.reserve(cfg.n_parallel_dirs);
        for (double phi : cfg.parallel_directions()) {
            Successor s;
            s.step = {false, phi, 1, ds};
            const Pose p = primitive_pose(state, state.mode, phi, 1, ds, params);
            s.state = {p.x, p.y, p.theta, state.mode};
            out.push_back(s);
        }
        return out;
    }
    out.reserve(2 * cfg.n_steer);
    for (double delta : cfg.steer_samples(params)) {
        for (int gear : {1, -1}) {
            Successor s;
            s.step = {false, delta, gear, ds};
            const Pose p = primitive_pose(state, state.mode, delta, gear, ds, params);
            s.state = {p.x, p.y, p.theta, state.mode};
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Successor> expand_inter(const State4D& state, const PlanConfig& cfg,
                                    double goal_theta) {
    std::vector<Successor> out;
    for (MotionMode m : cfg.modes) {
        if (m == state.mode) continue;
        if (m == MotionMode::Parallel &&
            std::abs(angle_diff(state.theta, goal_theta)) > cfg.eps_parallel)
            continue;
        Successor s;
        s.state = {state.x, state.y, state.theta, m};
        s.step = {true, 0.0, 1, 0.0};
        out.push_back(s);
    }
    return out;
}

double step_cost(const std::optional<StepDescriptor>& prev, const StepDescriptor& next,
                 const PlanConfig& cfg, const RobotParams& params) {
    if (next.is_switch) return params.switch_cost();
    double c = next.length + cfg.c_steer * std::abs(next.delta);
    if (next.gear < 0) c += cfg.c_reverse;
    if (prev && !prev->is_switch) {
        c += cfg.c_steer_change * std::abs(next.delta - prev->delta);
        if (next.gear != prev->gear) c += cfg.c_direction_change;
    }
    return c;
}

std::vector<Pose> primitive_samples(const State4D& from, const Successor& succ,
                                    const RobotParams& params, double sample_step) {
    std::vector<Pose> out;
    if (succ.step.is_switch) {
        out.push_back({succ.state.x, succ.state.y, succ.state.theta});
        return out;
    }
    const double ds = succ.step.length;
    const int n = std::max(1, static_cast<int>(std::ceil(ds / sample_step)));
    out.reserve(n);
    for (int k = 1; k <= n; ++k)
        out.push_back(primitive_pose(from, succ.state.mode, succ.step.delta,
                                     succ.step.gear, ds * k / n, params));
    return out;
}

std::optional<AnalyticConnection> try_analytic_connect(
    const State4D& state, const Pose& goal, const OccupancyGrid& grid,
    const Footprint& fp, const RobotParams& params, const PlanConfig& cfg) {
    std::vector<AnalyticConnection> candidates;
    for (MotionMode m : cfg.modes) {
        auto path = mode_rs(state.pose(), goal, m, params, cfg.eps_parallel);
        if (!path) continue;
        AnalyticConnection c;
        c.cost = path->total_length + (m != state.mode ? params.switch_cost() : 0.0);
        c.mode = m;
        c.path = std::move(*path);
        candidates.push_back(std::move(c));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const AnalyticConnection& a, const AnalyticConnection& b) {
                         return a.cost < b.cost;
                     });
    for (AnalyticConnection& c : candidates) {
        const auto poses = sample_path(c.path, state.pose(), collision_step(grid));
        if (is_motion_free(grid, fp, poses)) return std::move(c);
    }
    return std::nullopt;
}

namespace {

enum class Arrival : std::uint8_t { Root, Motion, Switch };

struct SearchNode {
    State4D state;
    double g = 0.0;
    std::int32_t parent = -1;
    StepDescriptor step;
    Arrival arrival = Arrival::Root;
};

struct HeapEntry {
    double f = 0.0;
    double g = 0.0;
    DiscreteKey key;
    std::int32_t node = -1;
    std::uint64_t seq = 0;
};

struct HeapCompare {
    // priority_queue keeps the "largest" on top; invert for a min-heap with
    // deterministic tie-breaking: lower f, then lower g, then key, then seq.
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g > b.g;
        if (a.key != b.key) return b.key < a.key;
        return a.seq > b.seq;
    }
};

class BestG {
public:
    BestG(const OccupancyGrid& grid, int n_theta)
        : n_theta_(n_theta), width_(grid.width()),
          values_(static_cast<std::size_t>(grid.width()) * grid.height() * n_theta * 3,
                  std::numeric_limits<double>::infinity()) {}

    double& operator[](const DiscreteKey& k) {
        const std::size_t cell = static_cast<std::size_t>(k.iy) * width_ + k.ix;
        return values_[(cell * n_theta_ + k.itheta) * 3 +
                       (static_cast<int>(k.mode) - 1)];
    }

private:
    int n_theta_;
    int width_;
    std::vector<double> values_;
};

PlanResult reconstruct_path(const std::vector<SearchNode>& nodes, std::int32_t leaf,
                            const std::optional<AnalyticConnection>& conn,
                            const RobotParams& params, const OccupancyGrid& grid) {
    std::vector<std::int32_t> chain;
    for (std::int32_t i = leaf; i >= 0; i = nodes[i].parent) {
        chain.push_back(i);
        assert(chain.size() <= nodes.size() && "cyclic parent chain");
    }
    std::reverse(chain.begin(), chain.end());

    PlanResult result;
    const SearchNode& root = nodes[chain.front()];
    result.waypoints.push_back(
        {root.state.x, root.state.y, root.state.theta, root.state.mode, 1, 0.0});

    const double step = collision_step(grid);
    double cum = 0.0;
    for (std::size_t ci = 1; ci < chain.size(); ++ci) {
        const SearchNode& node = nodes[chain[ci]];
        const SearchNode& par = nodes[node.parent];
        if (node.arrival == Arrival::Switch) {
            result.waypoints.push_back({node.state.x, node.state.y, node.state.theta,
                                        node.state.mode, 1, cum});
            ++result.switch_count;
            continue;
        }
        const Successor succ{node.state, node.step};
        const auto samples = primitive_samples(par.state, succ, params, step);
        const double per = node.step.length / samples.size();
        for (std::size_t k = 0; k < samples.size(); ++k) {
            const double c = (k + 1 == samples.size()) ? cum + node.step.length
                                                       : cum + per * (k + 1);
            result.waypoints.push_back({samples[k].x, samples[k].y, samples[k].theta,
                                        node.state.mode, node.step.gear, c});
        }
        cum += node.step.length;
    }
    result.tail_start_length = cum;
    result.total_cost = nodes[leaf].g;

    if (conn) {
        const Pose anchor = nodes[leaf].state.pose();
        if (conn->mode != nodes[leaf].state.mode) {
            result.waypoints.push_back(
                {anchor.x, anchor.y, anchor.theta, conn->mode, 1, cum});
            ++result.switch_count;
        }
        const auto tail = sample_path_detailed(conn->path, anchor, step);
        for (std::size_t k = 1; k < tail.size(); ++k) {
            result.waypoints.push_back({tail[k].pose.x, tail[k].pose.y,
                                        tail[k].pose.theta, conn->mode, tail[k].gear,
                                        cum + tail[k].cum_length});
        }
        result.total_cost += conn->cost;
    }
    result.total_length = result.waypoints.back().cum_length;
    return result;
}

}  // namespace

PlanOutcome plan(const OccupancyGrid& grid, const RobotParams& params,
                 const PlanConfig& cfg, const State4D& start, const Pose& goal) {
    params.validate();
    cfg.validate();
    if (!cfg.has_mode(start.mode))
        throw std::invalid_argument("start mode is not in the configured mode set");

    const auto t0 = std::chrono::steady_clock::now();
    PlanOutcome out;
    auto finish = [&](PlanStatus status) -> PlanOutcome& {
        out.status = status;
        out.stats.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        if (out.result) out.result->stats = out.stats;
        return out;
    };

    const Footprint fp{params.half_length, params.half_width};
    if (!is_pose_free(grid, fp, start.pose())) return finish(PlanStatus::StartInCollision);
    if (!is_pose_free(grid, fp, goal)) return finish(PlanStatus::GoalInCollision);

    DistanceField field;
    try {
        field = build_distance_field(grid, grid.cell_x(goal.x), grid.cell_y(goal.y),
                                     params.half_width);
    } catch (const std::invalid_argument&) {
        return finish(PlanStatus::GoalUnreachable);
    }

    HeuristicContext ctx;
    ctx.grid = &grid;
    ctx.field = &field;
    ctx.params = params;
    ctx.goal = goal;
    ctx.modes = cfg.modes;
    ctx.switch_cost = params.switch_cost();
    ctx.eps_parallel = cfg.eps_parallel;

    const State4D start_n{start.x, start.y, wrap_to_2pi(start.theta), start.mode};
    if (std::isinf(h_euc(ctx, start_n))) return finish(PlanStatus::GoalUnreachable);

    const bool baseline =
        cfg.modes.size() == 1 && cfg.modes.front() == MotionMode::Ackermann;
    auto heuristic = [&](const State4D& s) {
        return baseline ? h_baseline(ctx, s) : h_multimodal(ctx, s);
    };

    std::vector<SearchNode> nodes;
    nodes.push_back({start_n, 0.0, -1, {}, Arrival::Root});

    BestG best_g(grid, cfg.n_theta);
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCompare> open;
    std::uint64_t seq = 0;

    const DiscreteKey start_key = discretize(start_n, cfg, grid);
    best_g[start_key] = 0.0;
    open.push({heuristic(start_n), 0.0, start_key, 0, seq++});

    const double sample_step = collision_step(grid);
    double last_f = -std::numeric_limits<double>::infinity();

    while (!open.empty()) {
        out.stats.open_peak = std::max<std::int64_t>(out.stats.open_peak, open.size());
        const HeapEntry e = open.top();
        open.pop();
        if (e.g > best_g[e.key] + 1e-12) continue;  // superseded entry
        const State4D state = nodes[e.node].state;

        if (e.f < last_f - 1e-9) ++out.stats.f_monotonicity_violations;
        last_f = std::max(last_f, e.f);

        if (h_euc(ctx, state) <= cfg.r_connect) {
            ++out.stats.analytic_attempts;
            if (auto conn = try_analytic_connect(state, goal, grid, fp, params, cfg)) {
                out.result = reconstruct_path(nodes, e.node, conn, params, grid);
                return finish(PlanStatus::Success);
            }
        }

        if (out.stats.expansions >= cfg.max_expansions)
            return finish(PlanStatus::IterationLimit);
        ++out.stats.expansions;

        // nodes may reallocate below; copy what the expansion needs
        const Arrival arrival = nodes[e.node].arrival;
        const double g_node = nodes[e.node].g;
        const std::optional<StepDescriptor> prev =
            (arrival == Arrival::Motion) ? std::optional(nodes[e.node].step) : std::nullopt;

        auto consider = [&](const Successor& succ, bool needs_collision_check) {
            const int ix = grid.cell_x(succ.state.x);
            const int iy = grid.cell_y(succ.state.y);
            if (!grid.in_bounds(ix, iy)) return;
            const DiscreteKey key = discretize(succ.state, cfg, grid);
            const double g2 = g_node + step_cost(prev, succ.step, cfg, params);
            if (g2 >= best_g[key] - 1e-9) return;
            if (needs_collision_check) {
                const auto samples = primitive_samples(state, succ, params, sample_step);
                if (!is_motion_free(grid, fp, samples)) return;
            }
            best_g[key] = g2;
            nodes.push_back({succ.state, g2, e.node, succ.step,
                             succ.step.is_switch ? Arrival::Switch : Arrival::Motion});
            open.push({g2 + heuristic(succ.state), g2, key,
                       static_cast<std::int32_t>(nodes.size() - 1), seq++});
        };

        for (const Successor& succ : expand_intra(state, cfg, params))
            consider(succ, true);
        if (arrival != Arrival::Switch) {
            // switch nodes must take one intra-modal step before switching again
            for (const Successor& succ : expand_inter(state, cfg, goal.theta))
                consider(succ, false);
        }
    }
    return finish(PlanStatus::NoPath);
}

namespace {

double snap_to_grid(double value, const std::vector<double>& grid, bool angular) {
    double best = grid.front();
    double best_err = std::numeric_limits<double>::infinity();
    for (double g : grid) {
        const double err = angular ? std::abs(angle_diff(value, g)) : std::abs(value - g);
        if (err < best_err) {
            best_err = err;
            best = g;
        }
    }
    return best;
}

/// Exact arc length of one circular step from its chord and heading change.
double step_arc_length(const Waypoint& a, const Waypoint& b) {
    const double chord = std::hypot(b.x - a.x, b.y - a.y);
    const double alpha = std::abs(wrap_to_pi(b.theta - a.theta));
    if (alpha < 1e-9 || chord < 1e-12) return chord;
    return chord * (alpha / 2.0) / std::sin(alpha / 2.0);
}

}  // namespace

PathMetrics path_metrics(std::span<const Waypoint> waypoints, const RobotParams& params,
                         const PlanConfig& cfg, double tail_start_length) {
    PathMetrics m;
    if (waypoints.size() < 2) return m;

    const double ds = params.step_length();
    const std::vector<double> steer_grid = cfg.steer_samples(params);
    const std::vector<double> dir_grid = cfg.parallel_directions();
    constexpr double kZeroDisp = 1e-4;    // switch records, quantization-safe
    constexpr double kBoundaryTol = 1e-4; // primitive boundaries on the ds lattice

    std::optional<StepDescriptor> prev;
    std::size_t i = 1;
    while (i < waypoints.size()) {
        const Waypoint& a = waypoints[i - 1];
        const Waypoint& b = waypoints[i];
        const double chord = std::hypot(b.x - a.x, b.y - a.y);

        if (chord <= kZeroDisp && b.mode != a.mode) {
            m.switch_penalty += params.switch_cost();
            ++m.switch_count;
            prev.reset();  // a switch clears the motion history
            ++i;
            continue;
        }

        if (b.cum_length > tail_start_length + kBoundaryTol) {
            // analytic tail: contributes length only
            m.length += step_arc_length(a, b);
            ++i;
            continue;
        }

        // Consume one tree primitive: steps up to the next multiple of ds,
        // stopping early at switch records or the tail boundary.
        auto at_boundary = [&](const Waypoint& wp) {
            const double k = std::round(wp.cum_length / ds);
            return std::abs(wp.cum_length - k * ds) <= kBoundaryTol;
        };
        const std::size_t first = i;
        double arc = step_arc_length(a, b);
        std::size_t last = i;
        ++i;
        while (!at_boundary(waypoints[last]) && i < waypoints.size()) {
            const Waypoint& pa2 = waypoints[i - 1];
            const Waypoint& pb2 = waypoints[i];
            const double ch = std::hypot(pb2.x - pa2.x, pb2.y - pa2.y);
            if (ch <= kZeroDisp && pb2.mode != pa2.mode) break;
            if (pb2.cum_length > tail_start_length + kBoundaryTol) break;
            arc += step_arc_length(pa2, pb2);
            last = i;
            ++i;
        }
        const Waypoint& pa = waypoints[first - 1];
        const Waypoint& pb = waypoints[last];

        StepDescriptor d;
        d.length = arc;
        d.gear = pb.gear;
        if (pb.mode == MotionMode::Parallel) {
            d.gear = 1;
            const double world_dir = std::atan2(pb.y - pa.y, pb.x - pa.x);
            d.delta = snap_to_grid(wrap_to_pi(world_dir - pa.theta), dir_grid, true);
        } else {
            const double dtheta = wrap_to_pi(pb.theta - pa.theta);
            const double kappa = (arc > 0.0) ? dtheta / (d.gear * arc) : 0.0;
            const double axis = (pb.mode == MotionMode::Ackermann) ? params.wheelbase
                                                                   : params.track_width;
            d.delta = snap_to_grid(std::atan(kappa * axis / 2.0), steer_grid, false);
        }

        m.length += arc;
        m.steer_penalty += cfg.c_steer * std::abs(d.delta);
        if (d.gear < 0) m.reverse_penalty += cfg.c_reverse;
        if (prev) {
            m.steer_change_penalty += cfg.c_steer_change * std::abs(d.delta - prev->delta);
            if (d.gear != prev->gear) m.direction_change_penalty += cfg.c_direction_change;
        }
        prev = d;
    }

    m.cost = m.length + m.steer_penalty + m.steer_change_penalty + m.reverse_penalty +
             m.direction_change_penalty + m.switch_penalty;
    return m;
}

}  // namespace fourwis
