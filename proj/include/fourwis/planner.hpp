#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourwis/heuristics.hpp"
#include "fourwis/occupancy_grid.hpp"
#include "fourwis/reeds_shepp.hpp"

namespace fourwis {

/// Grid-discretized identity of a State4D, used for closed-list dedup.
struct DiscreteKey {
    int ix = 0;
    int iy = 0;
    int itheta = 0;
    MotionMode mode = MotionMode::Ackermann;

    friend bool operator==(const DiscreteKey&, const DiscreteKey&) = default;
    friend auto operator<=>(const DiscreteKey&, const DiscreteKey&) = default;
};

/// Search parameters. Velocity/time inputs (v_ref, dt, t_switch) live in
/// RobotParams; the penalty weights default to the standard set.
struct PlanConfig {
    double c_reverse = 2.0;
    double c_steer = 1.0;
    double c_steer_change = 1.0;
    double c_direction_change = 1.0;

    int n_steer = 5;          // steering samples per gear, odd >= 3
    int n_parallel_dirs = 8;  // translation direction samples in parallel mode
    int n_theta = 72;         // heading bins for the closed list
    double r_connect = 5.0;   // analytic connection trigger radius, m
    double eps_parallel = 0.1;  // heading tolerance gating parallel mode, rad
    std::vector<MotionMode> modes = {MotionMode::Ackermann, MotionMode::Lateral,
                                     MotionMode::Parallel};
    std::int64_t max_expansions = 1'000'000;

    bool has_mode(MotionMode m) const;
    /// Uniform steering samples over [-max_steer, max_steer], includes 0.
    std::vector<double> steer_samples(const RobotParams& params) const;
    /// Uniform body-frame translation directions in (-pi, pi].
    std::vector<double> parallel_directions() const;
    void validate() const;
};

/// How an edge was taken: either one fixed-length motion primitive or a
/// zero-displacement mode switch.
struct StepDescriptor {
    bool is_switch = false;
    double delta = 0.0;  // steering sample (modes 1-2) or direction phi (mode 3)
    int gear = 1;
    double length = 0.0;  // arc length, m (0 for switches)
};

/// One expansion successor: target state plus the step that reaches it.
/// Collision filtering happens at insertion, not here.
struct Successor {
    State4D state;
    StepDescriptor step;
};

/// Closed-list key of a state. Throws std::out_of_range for states outside
/// the map.
DiscreteKey discretize(const State4D& state, const PlanConfig& cfg,
                       const OccupancyGrid& grid);

/// Intra-modal successors: arcs for modes 1-2 (every steering sample x both
/// gears), straight translations for mode 3 (every direction, forward only).
std::vector<Successor> expand_intra(const State4D& state, const PlanConfig& cfg,
                                    const RobotParams& params);

/// Inter-modal successors: one per other available mode at the identical
/// pose; parallel mode only when the heading is aligned with the goal within
/// eps_parallel.
std::vector<Successor> expand_inter(const State4D& state, const PlanConfig& cfg,
                                    double goal_theta);

/// Incremental cost of taking `next` after `prev` (absent prev = first motion
/// from the root or from a switch node: steer-change and direction-change
/// penalties are suppressed).
double step_cost(const std::optional<StepDescriptor>& prev, const StepDescriptor& next,
                 const PlanConfig& cfg, const RobotParams& params);

/// Poses along a motion-primitive step, spaced <= sample_step, endpoint
/// included, start pose excluded.
std::vector<Pose> primitive_samples(const State4D& from, const Successor& succ,
                                    const RobotParams& params, double sample_step);

/// A feasible terminal Reeds-Shepp connection and its Eq.-style cost
/// (curve length plus the switch penalty when the connection mode differs).
struct AnalyticConnection {
    RSPath path;
    MotionMode mode = MotionMode::Ackermann;
    double cost = 0.0;
};

/// Computes every available per-mode connection to the goal, sorts by
/// ascending connection cost and returns the first collision-free candidate.
std::optional<AnalyticConnection> try_analytic_connect(
    const State4D& state, const Pose& goal, const OccupancyGrid& grid,
    const Footprint& fp, const RobotParams& params, const PlanConfig& cfg);

/// One record of a planned path: pose, active mode, gear and cumulative arc
/// length. Zero-displacement records with a mode change mark switches.
struct Waypoint {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    MotionMode mode = MotionMode::Ackermann;
    int gear = 1;
    double cum_length = 0.0;
};

struct SearchStats {
    std::int64_t expansions = 0;
    std::int64_t open_peak = 0;
    std::int64_t analytic_attempts = 0;
    std::int64_t f_monotonicity_violations = 0;  // logged, not asserted
    double wall_ms = 0.0;
};

struct PlanResult {
    std::vector<Waypoint> waypoints;
    double total_length = 0.0;
    double total_cost = 0.0;
    int switch_count = 0;
    /// Cumulative length where the analytic tail begins (== total_length when
    /// the path ends on the search tree).
    double tail_start_length = 0.0;
    SearchStats stats;
};

enum class PlanStatus {
    Success,
    StartInCollision,
    GoalInCollision,
    GoalUnreachable,  // goal cell blocked or disconnected in the distance field
    NoPath,           // open list exhausted
    IterationLimit,
};

const char* plan_status_name(PlanStatus s);

struct PlanOutcome {
    PlanStatus status = PlanStatus::NoPath;
    std::optional<PlanResult> result;
    SearchStats stats;  // populated on failure too

    bool ok() const { return status == PlanStatus::Success; }
};

/// Extended Hybrid A* over (x, y, theta, mode). Best-first on f = g + h with
/// the multi-modal heuristic (the classic dual heuristic when only Ackermann
/// is available), closed-list on DiscreteKey with reopening on g-improvement,
/// and terminal analytic connection once h_euc drops below r_connect.
PlanOutcome plan(const OccupancyGrid& grid, const RobotParams& params,
                 const PlanConfig& cfg, const State4D& start, const Pose& goal);

/// Replay components of the accumulated cost over a waypoint stream.
struct PathMetrics {
    double length = 0.0;
    double cost = 0.0;
    double steer_penalty = 0.0;
    double steer_change_penalty = 0.0;
    double reverse_penalty = 0.0;
    double direction_change_penalty = 0.0;
    double switch_penalty = 0.0;
    int switch_count = 0;
};

/// Recomputes length and the extended accumulated cost from a waypoint
/// stream. Steering values are recovered from the step geometry and snapped
/// to the configured sample grids; records beyond tail_start_length belong to
/// the analytic tail and contribute length only.
PathMetrics path_metrics(std::span<const Waypoint> waypoints, const RobotParams& params,
                         const PlanConfig& cfg, double tail_start_length);

}  // namespace fourwis
