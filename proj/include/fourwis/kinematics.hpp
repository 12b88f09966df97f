#pragma once

#include <array>
#include <cstdint>

#include "fourwis/geometry.hpp"

namespace fourwis {

/// Motion modes of a four-wheel independent steering platform.
/// Numeric values are part of the scenario/path file formats.
enum class MotionMode : std::uint8_t {
    Ackermann = 1,  // all wheels share one ICR, car-like cornering
    Lateral = 2,    // Ackermann geometry rotated 90 deg, track width as wheelbase
    Parallel = 3,   // all wheels parallel, body translates at fixed heading
};

constexpr std::array<MotionMode, 3> kAllModes = {
    MotionMode::Ackermann, MotionMode::Lateral, MotionMode::Parallel};

const char* mode_name(MotionMode m);

/// Geometric and kinematic constants of the robot.
/// Defaults are the 1.00 m x 0.62 m platform used throughout the tests.
struct RobotParams {
    double half_length = 0.50;       // l, m
    double half_width = 0.31;        // w, m
    double wheelbase = 0.68;         // L, m
    double track_width = 0.52;       // W, m
    double max_steer = 0.5235987755982988;  // delta_max, rad (30 deg)
    double max_steer_rate = M_PI;    // rad/s (180 deg/s)
    double wheel_radius = 0.13;      // m
    double v_ref = 1.0;              // m/s
    double dt = 0.4;                 // s, expansion sampling time
    double t_switch = 1.0;           // s, mode switch time

    /// Arc length of one motion primitive.
    double step_length() const { return v_ref * dt; }
    /// Cost of one mode switch, commensurable with path length.
    double switch_cost() const { return v_ref * t_switch; }

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Per-wheel steering angles and speeds. Wheel order: FL, FR, RL, RR.
struct WheelCommand {
    std::array<double, 4> steer{};  // eta_i, rad
    std::array<double, 4> speed{};  // v_i, m/s
};

/// Body velocity in the world frame.
struct BodyTwist {
    double vx = 0.0;     // m/s
    double vy = 0.0;     // m/s
    double omega = 0.0;  // rad/s
};

/// Wheel mount points in the body frame, order FL, FR, RL, RR.
/// Front wheels have positive x, left wheels positive y.
std::array<Vec2, 4> wheel_positions(const RobotParams& params);

/// Average rigid-body twist induced by a wheel command at heading theta.
/// Exact when the command is consistent with a single rigid-body motion.
BodyTwist forward_kinematics(const RobotParams& params, const WheelCommand& cmd,
                             double theta);

/// Ackermann-mode wheel constraints for longitudinal speed v and virtual
/// steer eta. Rear wheels counter-steer; eta = 0 degenerates to a straight
/// command with all wheel speeds equal to v.
WheelCommand ackermann_wheel_command(const RobotParams& params, double v, double eta);

/// Lateral-mode wheel constraints: the Ackermann geometry with wheelbase and
/// track width exchanged, all wheel angles offset by +pi/2 so the platform
/// rolls along its lateral axis.
WheelCommand lateral_wheel_command(const RobotParams& params, double v, double eta);

/// Parallel-mode wheel constraints with the mirrored right-side angle
/// convention (eta2 = eta4 = sgn(eta) * (pi - |eta|)), sgn(0) = 0.
WheelCommand parallel_wheel_command(const RobotParams& params, double v, double eta);

/// Physical crab command: every wheel at angle eta, every speed v. The body
/// translates along eta without heading change.
WheelCommand crab_wheel_command(const RobotParams& params, double v, double eta);

/// Maximum path curvature reachable in a mode:
/// Ackermann 2*tan(delta_max)/L, lateral 2*tan(delta_max)/W,
/// parallel bounded by the steer-rate limit at reference velocity.
double max_curvature(const RobotParams& params, MotionMode mode);

}  // namespace fourwis
