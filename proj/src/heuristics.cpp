#include "fourwis/heuristics.hpp"

#include <algorithm>
#include <cmath>

namespace fourwis {

double h_euc(const HeuristicContext& ctx, const State4D& state) {
    const OccupancyGrid& grid = *ctx.grid;
    const double field = ctx.field->at(grid.cell_x(state.x), grid.cell_y(state.y));
    if (std::isinf(field)) return field;
    const double straight = std::hypot(ctx.goal.x - state.x, ctx.goal.y - state.y);
    const double diag = grid.resolution() * std::sqrt(2.0);
    const double around = (field - diag) / kOctileOverestimate;
    return std::max({straight, around, 0.0});
}

std::optional<double> h_rs_mode(const HeuristicContext& ctx, const State4D& state,
                                MotionMode mode) {
    const auto path = mode_rs(state.pose(), ctx.goal, mode, ctx.params, ctx.eps_parallel);
    if (!path) return std::nullopt;
    return path->total_length;
}

double h_baseline(const HeuristicContext& ctx, const State4D& state) {
    const auto rs = h_rs_mode(ctx, state, MotionMode::Ackermann);
    return std::max(h_euc(ctx, state), rs.value_or(0.0));
}

double h_multimodal(const HeuristicContext& ctx, const State4D& state) {
    const double unconstrained = h_euc(ctx, state);
    double best_rs = std::numeric_limits<double>::infinity();
    bool any = false;
    // cheap modes first: once the min term drops to the unconstrained value
    // the max is decided and the remaining solves cannot change it
    static constexpr MotionMode kByCost[] = {MotionMode::Parallel, MotionMode::Ackermann,
                                             MotionMode::Lateral};
    for (MotionMode m : kByCost) {
        if (std::find(ctx.modes.begin(), ctx.modes.end(), m) == ctx.modes.end()) continue;
        const auto rs = h_rs_mode(ctx, state, m);
        if (!rs) continue;
        const double term = *rs + (m != state.mode ? ctx.switch_cost : 0.0);
        best_rs = std::min(best_rs, term);
        any = true;
        if (best_rs <= unconstrained) return unconstrained;
    }
    if (!any) return unconstrained;
    return std::max(unconstrained, best_rs);
}

}  // namespace fourwis
