#include "fourwis/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace fourwis {

const char* mode_name(MotionMode m) {
    switch (m) {
        case MotionMode::Ackermann: return "ackermann";
        case MotionMode::Lateral: return "lateral";
        case MotionMode::Parallel: return "parallel";
    }
    return "unknown";
}

void RobotParams::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (half_length <= 0.0 || half_width <= 0.0) fail("footprint half extents must be positive");
    if (wheelbase <= 0.0 || track_width <= 0.0) fail("wheelbase and track width must be positive");
    if (wheelbase > 2.0 * half_length) fail("wheelbase exceeds body length");
    if (track_width > 2.0 * half_width) fail("track width exceeds body width");
    if (max_steer <= 0.0 || max_steer >= M_PI / 2.0) fail("max steer must be in (0, pi/2)");
    if (max_steer_rate <= 0.0) fail("max steer rate must be positive");
    if (wheel_radius <= 0.0) fail("wheel radius must be positive");
    if (v_ref <= 0.0) fail("reference velocity must be positive");
    if (dt <= 0.0) fail("sampling time must be positive");
    if (t_switch < 0.0) fail("switch time must be nonnegative");
}

std::array<Vec2, 4> wheel_positions(const RobotParams& params) {
    const double hx = params.wheelbase / 2.0;
    const double hy = params.track_width / 2.0;
    return {Vec2{hx, hy}, Vec2{hx, -hy}, Vec2{-hx, hy}, Vec2{-hx, -hy}};
}

BodyTwist forward_kinematics(const RobotParams& params, const WheelCommand& cmd,
                             double theta) {
    const auto mounts = wheel_positions(params);
    BodyTwist t;
    for (int i = 0; i < 4; ++i) {
        const double eta = cmd.steer[i];
        const double v = cmd.speed[i];
        t.vx += 0.25 * v * std::cos(eta + theta);
        t.vy += 0.25 * v * std::sin(eta + theta);
        const double r2 = mounts[i].x * mounts[i].x + mounts[i].y * mounts[i].y;
        t.omega += v * (-mounts[i].y * std::cos(eta) + mounts[i].x * std::sin(eta)) / (4.0 * r2);
    }
    return t;
}

WheelCommand ackermann_wheel_command(const RobotParams& params, double v, double eta) {
    WheelCommand cmd;
    if (eta == 0.0) {
        cmd.speed = {v, v, v, v};
        return cmd;
    }
    const double L = params.wheelbase;
    const double W = params.track_width;
    const double tan_eta = std::tan(eta);
    // cot(eta_1) = cot(eta) - W/L  =>  tan(eta_1) = L*tan(eta) / (L - W*tan(eta))
    const double eta1 = std::atan2(L * tan_eta, L - W * tan_eta);
    const double eta2 = std::atan2(L * tan_eta, L + W * tan_eta);
    cmd.steer = {eta1, eta2, -eta1, -eta2};
    const double v_inner = v * tan_eta / std::sin(eta1);
    const double v_outer = v * tan_eta / std::sin(eta2);
    cmd.speed = {v_inner, v_outer, v_inner, v_outer};
    return cmd;
}

WheelCommand lateral_wheel_command(const RobotParams& params, double v, double eta) {
    RobotParams swapped = params;
    swapped.wheelbase = params.track_width;
    swapped.track_width = params.wheelbase;
    WheelCommand cmd = ackermann_wheel_command(swapped, v, eta);
    for (auto& s : cmd.steer) s += M_PI / 2.0;
    return cmd;
}

WheelCommand parallel_wheel_command(const RobotParams& /*params*/, double v, double eta) {
    const double sgn = (eta > 0.0) ? 1.0 : (eta < 0.0 ? -1.0 : 0.0);
    const double mirrored = sgn * (M_PI - std::abs(eta));
    WheelCommand cmd;
    cmd.steer = {eta, mirrored, eta, mirrored};
    cmd.speed = {v, v, v, v};
    return cmd;
}

WheelCommand crab_wheel_command(const RobotParams& /*params*/, double v, double eta) {
    WheelCommand cmd;
    cmd.steer = {eta, eta, eta, eta};
    cmd.speed = {v, v, v, v};
    return cmd;
}

double max_curvature(const RobotParams& params, MotionMode mode) {
    switch (mode) {
        case MotionMode::Ackermann:
            return 2.0 * std::tan(params.max_steer) / params.wheelbase;
        case MotionMode::Lateral:
            return 2.0 * std::tan(params.max_steer) / params.track_width;
        case MotionMode::Parallel:
            return params.max_steer_rate / params.v_ref;
    }
    return 0.0;
}

}  // namespace fourwis
