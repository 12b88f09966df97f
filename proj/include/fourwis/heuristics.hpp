#pragma once

#include <optional>
#include <vector>

#include "fourwis/distance_field.hpp"
#include "fourwis/kinematics.hpp"
#include "fourwis/reeds_shepp.hpp"

namespace fourwis {

/// Continuous planning state: pose plus motion mode.
struct State4D {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // rad, [0, 2*pi)
    MotionMode mode = MotionMode::Ackermann;

    Pose pose() const { return {x, y, theta}; }
};

/// Shared read-only context for heuristic evaluation.
struct HeuristicContext {
    const OccupancyGrid* grid = nullptr;
    const DistanceField* field = nullptr;
    RobotParams params;
    Pose goal;
    std::vector<MotionMode> modes;  // available mode set M
    double switch_cost = 1.0;       // v_ref * t_switch
    double eps_parallel = 0.1;      // rad
};

/// Worst-case ratio of the 8-connected grid metric over the Euclidean metric
/// (attained at 22.5 deg travel directions).
inline constexpr double kOctileOverestimate = 1.0823922002923940;

/// Unconstrained obstacle-aware cost-to-go (m). Combines the straight-line
/// distance with the Dijkstra field lookup deflated by the octile metric
/// distortion and one cell diagonal, so the estimate stays a lower bound on
/// achievable path length while remaining obstacle-aware. Infinite if the
/// state's cell cannot reach the goal.
double h_euc(const HeuristicContext& ctx, const State4D& state);

/// Kinematic Reeds-Shepp cost-to-go for one mode, ignoring obstacles.
/// Absent when mode Parallel is gated off by heading misalignment.
std::optional<double> h_rs_mode(const HeuristicContext& ctx, const State4D& state,
                                MotionMode mode);

/// Classic dual heuristic: max of the unconstrained term and the Ackermann
/// Reeds-Shepp term. Used by the baseline planner configuration.
double h_baseline(const HeuristicContext& ctx, const State4D& state);

/// Multi-modal heuristic:
///   max(h_euc, min over m' in M of [h_RS(m') + switch_cost * 1{m != m'}]).
/// Gated modes are excluded from the min; if every RS term is absent the
/// unconstrained term alone is returned.
double h_multimodal(const HeuristicContext& ctx, const State4D& state);

}  // namespace fourwis
