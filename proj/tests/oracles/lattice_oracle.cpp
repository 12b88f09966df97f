#include "oracles/lattice_oracle.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <tuple>

#include "fourwis/distance_field.hpp"
#include "fourwis/heuristics.hpp"

namespace lattice_oracle {

using namespace fourwis;

namespace {

struct Entry {
    double g;
    std::uint64_t seq;
    State4D state;
    bool is_switch_node;
    std::optional<StepDescriptor> prev;
    DiscreteKey key;
};

struct EntryCompare {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.g != b.g) return a.g > b.g;
        return a.seq > b.seq;
    }
};

}  // namespace

std::optional<double> min_total_cost(const OccupancyGrid& grid, const RobotParams& params,
                                     const PlanConfig& cfg, const State4D& start,
                                     const Pose& goal) {
    const Footprint fp{params.half_length, params.half_width};
    DistanceField field = build_distance_field(grid, grid.cell_x(goal.x),
                                               grid.cell_y(goal.y), params.half_width);
    HeuristicContext ctx;
    ctx.grid = &grid;
    ctx.field = &field;
    ctx.params = params;
    ctx.goal = goal;
    ctx.modes = cfg.modes;
    ctx.switch_cost = params.switch_cost();
    ctx.eps_parallel = cfg.eps_parallel;

    std::map<DiscreteKey, double> best_g;
    std::priority_queue<Entry, std::vector<Entry>, EntryCompare> open;
    std::uint64_t seq = 0;

    const State4D s0{start.x, start.y, wrap_to_2pi(start.theta), start.mode};
    const DiscreteKey k0 = discretize(s0, cfg, grid);
    best_g[k0] = 0.0;
    open.push({0.0, seq++, s0, false, std::nullopt, k0});

    const double sample_step = collision_step(grid);
    double best_total = std::numeric_limits<double>::infinity();

    while (!open.empty()) {
        const Entry e = open.top();
        open.pop();
        const auto it = best_g.find(e.key);
        if (it != best_g.end() && e.g > it->second + 1e-12) continue;

        if (h_euc(ctx, e.state) <= cfg.r_connect) {
            if (auto conn = try_analytic_connect(e.state, goal, grid, fp, params, cfg))
                best_total = std::min(best_total, e.g + conn->cost);
        }

        auto consider = [&](const Successor& succ) {
            const int ix = grid.cell_x(succ.state.x);
            const int iy = grid.cell_y(succ.state.y);
            if (!grid.in_bounds(ix, iy)) return;
            const DiscreteKey key = discretize(succ.state, cfg, grid);
            const double g2 = e.g + step_cost(e.prev, succ.step, cfg, params);
            const auto found = best_g.find(key);
            if (found != best_g.end() && g2 >= found->second - 1e-9) return;
            if (!succ.step.is_switch) {
                const auto samples = primitive_samples(e.state, succ, params, sample_step);
                if (!is_motion_free(grid, fp, samples)) return;
            }
            best_g[key] = g2;
            open.push({g2, seq++, succ.state, succ.step.is_switch,
                       succ.step.is_switch ? std::nullopt : std::optional(succ.step), key});
        };

        for (const Successor& succ : expand_intra(e.state, cfg, params)) consider(succ);
        if (!e.is_switch_node)
            for (const Successor& succ : expand_inter(e.state, cfg, goal.theta))
                consider(succ);
    }

    if (std::isinf(best_total)) return std::nullopt;
    return best_total;
}

}  // namespace lattice_oracle
